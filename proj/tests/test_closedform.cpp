#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polyenum/closedform.hpp>
#include <polyenum/errors.hpp>
#include <polyenum/funceq.hpp>
#include <polyenum/oracle.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace polyenum;

namespace {

// Keep only the terms with x-degree + y-degree <= hp. Enumerations bounded
// by half-perimeter are complete exactly on that window.
MultiSeries window_hp(const MultiSeries& a, int hp) {
    MultiSeries r(a.order());
    for (const auto& [e, c] : a.terms())
        if (e[VX] + e[VY] <= hp) r.add_term(e, c);
    return r;
}

void check_against_table(const MultiSeries& formula, const CoeffTable& table,
                         const std::vector<Var>& vars, TruncOrder o, int hp) {
    MultiSeries counted = window_hp(table.to_series(vars, o), hp);
    CHECK(window_hp(formula.truncated(o), hp) == counted);
}

// Area distribution as a q-series.
MultiSeries area_marginal(const CoeffTable& table, std::size_t axis, TruncOrder o) {
    MultiSeries r(o);
    for (const auto& [k, cnt] : table.marginal(axis))
        r.add_term({0, 0, k, 0}, rat(static_cast<long>(cnt)));
    return r;
}

std::vector<long long> coeff_run(const MultiSeries& a, Var v, int lo, int hi) {
    std::vector<long long> out;
    for (int d = lo; d <= hi; ++d) {
        Expo e{0, 0, 0, 0};
        e[v] = d;
        Rational c = a.coeff(e);
        REQUIRE(c.get_den() == 1);
        out.push_back(c.get_num().get_si());
    }
    return out;
}

}  // namespace

TEST_CASE("the catalog is closed and rejects unknown ids") {
    std::vector<std::string> ids = formula_ids();
    CHECK(ids.size() == 23);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    TruncOrder tiny = TruncOrder::full(3, 3, 3, 0);
    for (const std::string& id : ids) CHECK_NOTHROW(evaluate(id, tiny));
    CHECK_THROWS_AS(evaluate("pentagon_area", tiny), UnknownFormula);
    CHECK_THROWS_AS(evaluate("", tiny), UnknownFormula);
}

TEST_CASE("evaluation is deterministic") {
    TruncOrder o = TruncOrder::full(5, 5, 8, 0);
    for (const std::string& id : formula_ids())
        CHECK(evaluate(id, o).to_json() == evaluate(id, o).to_json());
}

TEST_CASE("bargraph area coefficients double at each area") {
    MultiSeries b = evaluate("bargraph_area", TruncOrder::qonly(5));
    CHECK(coeff_run(b, VQ, 1, 5) == std::vector<long long>{1, 2, 4, 8, 16});
}

TEST_CASE("area formulas match enumeration up to area 12") {
    TruncOrder o = TruncOrder::qonly(12);
    CoeffTable bg = enumerate_class(ClassLabel::Bargraph, 12);
    CHECK(evaluate("bargraph_area", o) == area_marginal(bg, 2, o));
    CoeffTable cc = enumerate_class(ClassLabel::ColumnConvex, 12);
    CHECK(evaluate("cc_area", o) == area_marginal(cc, 2, o));
    CoeffTable dcc =
        enumerate_intersection({ClassLabel::ColumnConvex, ClassLabel::DirectedNE}, 12);
    CHECK(evaluate("dcc_area", o) == area_marginal(dcc, 2, o));
}

TEST_CASE("width-area bargraph formula matches enumeration") {
    // For a bargraph the horizontal half-perimeter equals the width.
    TruncOrder o = TruncOrder::xq(12, 12);
    CoeffTable wk = enumerate_class(ClassLabel::Bargraph, 12).project({0, 2});
    CHECK(evaluate("bargraph_width_area", o) == wk.to_series({VX, VQ}, o));
}

TEST_CASE("perimeter formulas match enumeration up to half-perimeter 9") {
    // Half-perimeter 9 polygons reach area 20 at most.
    TruncOrder o = TruncOrder::xy(8);
    const int hp = 9;
    auto table = [&](ClassLabel l) { return enumerate_class(l, 20, hp).project({0, 1}); };
    check_against_table(evaluate("bargraph_perimeter", o), table(ClassLabel::Bargraph),
                        {VX, VY}, o, hp);
    check_against_table(evaluate("ferrers_perimeter", o), table(ClassLabel::Ferrers), {VX, VY}, o,
                        hp);
    check_against_table(evaluate("stack_perimeter", o), table(ClassLabel::Stack), {VX, VY}, o,
                        hp);
    check_against_table(evaluate("staircase_perimeter", o), table(ClassLabel::Staircase),
                        {VX, VY}, o, hp);
    check_against_table(evaluate("cc_perimeter", o), table(ClassLabel::ColumnConvex), {VX, VY}, o,
                        hp);
    CoeffTable dcc = enumerate_intersection({ClassLabel::ColumnConvex, ClassLabel::DirectedNE},
                                            20, hp)
                         .project({0, 1});
    check_against_table(evaluate("dcc_perimeter", o), dcc, {VX, VY}, o, hp);
}

TEST_CASE("perimeter root selection: first coefficients pin the branch") {
    // The cubic and the nested radical both have several algebraic roots;
    // the expansions used here must start exactly like the counting series.
    MultiSeries cc = evaluate("cc_perimeter", TruncOrder::xy(3));
    CHECK(cc.constant_term() == 0);
    CHECK(cc.coeff(1, 1) == 1);
    CHECK(cc.coeff(2, 1) == 1);
    CHECK(cc.coeff(1, 2) == 1);
    CHECK(cc.coeff(2, 2) == 5);
    MultiSeries dcc = evaluate("dcc_perimeter", TruncOrder::xy(3));
    CHECK(dcc.constant_term() == 0);
    CHECK(dcc.coeff(1, 1) == 1);
    CHECK(dcc.coeff(2, 1) == 1);
    CHECK(dcc.coeff(1, 2) == 1);
    CHECK(dcc.coeff(2, 2) == 4);
}

TEST_CASE("ferrers isotropic form collapses the two perimeter variables") {
    MultiSeries iso = evaluate("ferrers_perimeter_iso", TruncOrder::xy(9));
    CHECK(iso == substitute_xy_t(evaluate("ferrers_perimeter", TruncOrder::xy(9))));
    // 2^(t-2) diagrams of total half-perimeter t
    CHECK(coeff_run(iso, VX, 2, 7) == std::vector<long long>{1, 2, 4, 8, 16, 32});
}

TEST_CASE("staircase expansion: x^2 y^2 coefficient and Catalan diagonal") {
    MultiSeries s = evaluate("staircase_perimeter", TruncOrder::xy(9));
    CHECK(s.coeff(2, 2) == 3);
    MultiSeries iso = substitute_xy_t(s);
    CHECK(coeff_run(iso, VX, 2, 9) ==
          std::vector<long long>{1, 2, 5, 14, 42, 132, 429, 1430});
}

TEST_CASE("directed column-convex isotropic expansion") {
    MultiSeries iso = substitute_xy_t(evaluate("dcc_perimeter", TruncOrder::xy(9)));
    CHECK(coeff_run(iso, VX, 2, 9) ==
          std::vector<long long>{1, 2, 6, 20, 71, 263, 1005, 3933});
}

TEST_CASE("complete formulas match enumeration, half-perimeter 8, area 12") {
    TruncOrder o = TruncOrder::full(7, 7, 12, 0);
    const int hp = 8;
    auto check = [&](const char* id, ClassLabel l) {
        CoeffTable t = enumerate_class(l, 12, hp);
        check_against_table(evaluate(id, o), t, {VX, VY, VQ}, o, hp);
    };
    check("bargraph_complete", ClassLabel::Bargraph);
    check("ferrers_complete", ClassLabel::Ferrers);
    check("stack_complete", ClassLabel::Stack);
    check("staircase_complete", ClassLabel::Staircase);
    check("cc_complete", ClassLabel::ColumnConvex);
}

TEST_CASE("summing complete series over the area gives the perimeter series") {
    // Complete on the m+n <= 6 window, where every area fits under the cap.
    TruncOrder o = TruncOrder::full(5, 5, 9, 0);
    const int hp = 6;
    auto check = [&](const char* complete, const char* perimeter) {
        MultiSeries c = evaluate(complete, o);
        MultiSeries p = window_hp(evaluate(perimeter, TruncOrder::xy(5)), hp);
        MultiSeries agg(TruncOrder::xy(5));
        for (const auto& [e, coeff] : c.terms())
            if (e[VX] + e[VY] <= hp) agg.add_term({e[VX], e[VY], 0, 0}, coeff);
        CHECK(agg == p);
    };
    check("bargraph_complete", "bargraph_perimeter");
    check("ferrers_complete", "ferrers_perimeter");
    check("stack_complete", "stack_perimeter");
    check("staircase_complete", "staircase_perimeter");
    check("cc_complete", "cc_perimeter");
}

TEST_CASE("complete bargraphs aggregate over y to the width-area form") {
    TruncOrder o = TruncOrder::full(6, 12, 12, 0);
    MultiSeries agg = eval_var_one(evaluate("bargraph_complete", o), VY);
    MultiSeries wa = evaluate("bargraph_width_area", TruncOrder::xq(6, 12));
    CHECK(agg == wa);
}

TEST_CASE("directed animals: area formula, enumeration, and site statistic") {
    TruncOrder oq = TruncOrder::qonly(12);
    MultiSeries d = evaluate("directed_area", oq);
    CHECK(coeff_run(d, VQ, 1, 6) == std::vector<long long>{1, 2, 5, 13, 35, 96});
    CoeffTable rsp = enumerate_directed_rsp(12);  // keys (area, right site perimeter)
    CHECK(d == area_marginal(rsp, 0, oq));

    // refined by the right site perimeter, x marking the statistic
    TruncOrder o = TruncOrder::xq(10, 10);
    CoeffTable xq("rsp_xq", {"r", "k"}, {});
    for (const auto& [key, cnt] : rsp.entries())
        if (key[0] <= 10) xq.add({key[1], key[0]}, cnt);
    CHECK(evaluate("directed_area_rsp", o) == xq.to_series({VX, VQ}, o));

    // setting the statistic variable to 1 recovers the area series
    CHECK(eval_var_one(evaluate("directed_area_rsp", TruncOrder::xq(10, 10)), VX) ==
          evaluate("directed_area", TruncOrder::qonly(10)));
}

TEST_CASE("triangular directed animals: exactly one variant counts") {
    TruncOrder o = TruncOrder::xq(10, 10);
    CoeffTable t = enumerate_triangular_directed(10);  // keys (area, sw-only, s-only)
    CoeffTable sw("tri_sw", {"m", "k"}, {});
    CoeffTable so("tri_s", {"m", "k"}, {});
    for (const auto& [key, cnt] : t.entries()) {
        sw.add({key[1], key[0]}, cnt);
        so.add({key[2], key[0]}, cnt);
    }
    MultiSeries corrected = evaluate("triangular_directed_corrected", o);
    CHECK(corrected == sw.to_series({VX, VQ}, o));
    CHECK(corrected == so.to_series({VX, VQ}, o));

    // The raw radical differs from the count by a constant 1/2 and therefore
    // cannot be a counting series itself.
    MultiSeries raw = evaluate("triangular_directed", o);
    CHECK(raw.constant_term() == rat(1, 2));
    CHECK(raw != sw.to_series({VX, VQ}, o));
    CHECK(raw - rat(1, 2) == corrected);
}

TEST_CASE("strip polygon formulas match the walk enumeration") {
    TruncOrder o = TruncOrder::xy(7);
    const int hp = 8;
    CoeffTable s2 = enumerate_sap_strip(2, hp);
    check_against_table(evaluate("sap_strip2", o), s2, {VX, VY}, o, hp);
    CoeffTable s3 = enumerate_sap_strip(3, hp);
    check_against_table(evaluate("sap_strip3", o), s3, {VX, VY}, o, hp);
    CHECK(evaluate("sap_strip3_iso", TruncOrder::xy(7)) ==
          substitute_xy_t(evaluate("sap_strip3", TruncOrder::xy(7))));
}

TEST_CASE("area automaton solves to the published rational forms") {
    Poly2 one = Poly2::constant(1);
    Poly2 q = Poly2::monomial(1, 0);

    std::vector<RatFun> states = cc_automaton_states(false);
    REQUIRE(states.size() == 5);
    CHECK(states[0] == RatFun::poly(one));  // the empty-prefix class

    RatFun cc = cc_area_via_automaton();
    Poly2 num = q * (one - q) * (one - q) * (one - q);
    Poly2 den = one - rat(5) * q + rat(7) * q * q - rat(4) * q * q * q;
    CHECK(cc == RatFun::from(num, den));

    RatFun dcc = dcc_area_via_automaton();
    CHECK(dcc == RatFun::from(q * (one - q), one - rat(3) * q + q * q));

    // and both agree with the catalog expansions
    TruncOrder o = TruncOrder::qonly(16);
    CHECK(rf_to_series(cc, o, VQ, VY) == evaluate("cc_area", o));
    CHECK(rf_to_series(dcc, o, VQ, VY) == evaluate("dcc_area", o));
}

TEST_CASE("heaps of dimers build the directed-animal area series") {
    TruncOrder o = TruncOrder::qonly(20);
    MultiSeries d = heap_system_directed_area(o);
    CHECK(d.coeff(0, 0, 1) == 1);
    CHECK(d.coeff(0, 0, 2) == 2);
    CHECK(d == evaluate("directed_area", o));
    // the half-pyramid layer H = D/(1+D) starts with a single dimer
    MultiSeries h = divide(d, MultiSeries::one(o) + d);
    CHECK(h.coeff(0, 0, 1) == 1);
    CHECK(algebraic_residual(
              AlgebraicEquation{
                  {MultiSeries::var(o, VQ), MultiSeries::var(o, VQ) - MultiSeries::one(o),
                   MultiSeries::var(o, VQ)},
                  MultiSeries::zero(o)},
              h)
              .is_zero());
}
