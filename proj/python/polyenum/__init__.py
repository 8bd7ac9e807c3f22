"""Exact enumeration of polyomino and polygon classes.

Thin wrapper over the C++ extension: series come back as dictionaries
mapping exponent tuples (ex, ey, eq, es) to Fractions, count tables as
dictionaries mapping statistic tuples to ints. Everything is exact and
deterministic.
"""

import json
from fractions import Fraction

from _polyenum import (
    class_labels,
    enumerate_class,
    enumerate_sap_strip,
    evaluate_json,
    formula_ids,
    growth_lower_bound,
    run_all_checks,
    solve_strip,
)

__all__ = [
    "class_labels",
    "enumerate_class",
    "enumerate_sap_strip",
    "evaluate",
    "evaluate_json",
    "formula_ids",
    "growth_lower_bound",
    "run_all_checks",
    "solve_strip",
    "strip_rational",
]


def evaluate(formula_id, max_x=6, max_y=6, max_q=12):
    """Expand a catalog formula into {(ex, ey, eq, es): Fraction}."""
    data = json.loads(evaluate_json(formula_id, max_x, max_y, max_q))
    return {tuple(t["e"]): Fraction(int(t["n"]), int(t["d"])) for t in data["terms"]}


def strip_rational(height):
    """Numerator and denominator of the strip solution as
    {(deg_x, deg_y): Fraction} dictionaries."""
    raw = solve_strip(height)

    def table(terms):
        return {(dx, dy): Fraction(int(n), int(d)) for dx, dy, n, d in terms}

    return table(raw["numerator"]), table(raw["denominator"])
