from fractions import Fraction

import pytest

import polyenum


def test_catalog_is_sorted_and_contains_the_known_ids():
    ids = polyenum.formula_ids()
    assert ids == sorted(ids)
    for known in ("bargraph_area", "cc_perimeter", "staircase_complete", "sap_strip3"):
        assert known in ids


def test_bargraph_area_coefficients_double():
    series = polyenum.evaluate("bargraph_area", max_q=6)
    assert [series[(0, 0, k, 0)] for k in range(1, 7)] == [1, 2, 4, 8, 16, 32]


def test_unknown_identifiers_raise():
    with pytest.raises(ValueError):
        polyenum.evaluate("pentagon_area")
    with pytest.raises(ValueError):
        polyenum.enumerate_class("pentagon", 3)


def test_enumeration_matches_the_area_formula():
    table = polyenum.enumerate_class("bargraph", 8)
    by_area = {}
    for (_, _, k), count in table.items():
        by_area[k] = by_area.get(k, 0) + count
    series = polyenum.evaluate("bargraph_area", max_q=8)
    assert by_area == {k: series[(0, 0, k, 0)] for k in range(1, 9)}


def test_strip_solution_is_the_pinned_height_2_form():
    num, den = polyenum.strip_rational(2)
    assert num == {(1, 1): 2, (1, 2): 1, (2, 1): -2, (2, 2): 3}
    assert den == {(0, 0): 1, (1, 0): -2, (2, 0): 1, (2, 1): -2}
    assert polyenum.solve_strip(2)["display"].startswith("S_2(x, y) =")


def test_strip_series_agrees_with_the_walk_enumeration():
    num, den = polyenum.strip_rational(2)
    table = polyenum.enumerate_sap_strip(2, 6)
    # series expansion of num/den via the recurrence den * S = num
    series = {}
    den_const = den[(0, 0)]
    for m in range(7):
        for n in range(7):
            if m + n > 6:
                continue
            acc = Fraction(num.get((m, n), 0))
            for (dx, dy), c in den.items():
                if (dx, dy) != (0, 0) and dx <= m and dy <= n:
                    acc -= c * series[(m - dx, n - dy)]
            series[(m, n)] = acc / den_const
    for key, count in table.items():
        if key[0] + key[1] <= 6:
            assert series[key] == count
    for key, value in series.items():
        if value:
            assert table.get(key, 0) == value


def test_growth_bound_digits():
    assert polyenum.growth_lower_bound(2, digits=4) == "1.4142"


def test_class_labels_round_trip():
    labels = polyenum.class_labels()
    assert "bargraph" in labels and "ferrers" in labels
    assert polyenum.enumerate_class("ferrers", 3) == {
        (1, 1, 1): 1,
        (1, 2, 2): 1,
        (1, 3, 3): 1,
        (2, 1, 2): 1,
        (2, 2, 3): 1,
        (3, 1, 3): 1,
    }
