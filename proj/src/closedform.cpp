#include "polyenum/closedform.hpp"

#include <map>

#include "polyenum/errors.hpp"
#include "polyenum/funceq.hpp"

namespace polyenum {

namespace {

MultiSeries vx(TruncOrder o) { return MultiSeries::var(o, VX); }
MultiSeries vy(TruncOrder o) { return MultiSeries::var(o, VY); }
MultiSeries vq(TruncOrder o) { return MultiSeries::var(o, VQ); }

// Small polynomial in x from a coefficient list, index = degree.
MultiSeries poly_x(TruncOrder o, std::initializer_list<long> coeffs) {
    MultiSeries p(o);
    int d = 0;
    for (long c : coeffs) p.add_term({d++, 0, 0, 0}, rat(c));
    return p;
}

MultiSeries gen_bargraph_area(TruncOrder o) {
    MultiSeries q = vq(o);
    return q * reciprocal(MultiSeries::one(o) - rat(2) * q);
}

// (1 - x - y - xy - sqrt((1-y)((1-x)^2 - y(1+x)^2))) / (2x). The numerator
// vanishes identically at x = 0, so the division is exact; one extra x order
// is carried so the quotient is complete at the requested order.
MultiSeries gen_bargraph_perimeter(TruncOrder o) {
    TruncOrder ob = o;
    ob.x += 1;
    MultiSeries one = MultiSeries::one(ob), x = vx(ob), y = vy(ob);
    MultiSeries rad = sqrt((one - y) * (pow(one - x, 2) - y * pow(one + x, 2)));
    MultiSeries num = one - x - y - x * y - rad;
    return (div_monomial(num, {1, 0, 0, 0}) * rat(1, 2)).truncated(o);
}

MultiSeries gen_bargraph_width_area(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), q = vq(o);
    return x * q * reciprocal(one - q - x * q);
}

// Two alternating sums over the width n; the n-th summand carries
// x^n q^{n(n+1)/2}, which bounds the loop. The outer factor y (the seam
// cell of the telescoped geometric sum) is needed for the series to count
// anything at all: without it the expansion starts with the y-free term xq.
MultiSeries gen_bargraph_complete(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), y = vy(o);
    MultiSeries ip = MultiSeries::zero(o), im = MultiSeries::zero(o);
    for (int n = 1; n <= o.x && n * (n + 1) / 2 <= o.q; ++n) {
        MultiSeries base = shift(pow(y - one, n - 1), {n, 0, n * (n + 1) / 2, 0});
        ip = ip + base * reciprocal(pochhammer(one, n - 1) * pochhammer(y, n));
        im = im + base * reciprocal(pochhammer(one, n) * pochhammer(y, n - 1));
    }
    return y * ip * reciprocal(one - im);
}

MultiSeries gen_ferrers_perimeter(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), y = vy(o);
    return x * y * reciprocal(one - x - y);
}

MultiSeries gen_ferrers_perimeter_iso(TruncOrder o) {
    MultiSeries t = vx(o);
    return t * t * reciprocal(MultiSeries::one(o) - rat(2) * t);
}

MultiSeries gen_ferrers_complete(TruncOrder o) {
    MultiSeries x = vx(o);
    MultiSeries f = MultiSeries::zero(o);
    for (int n = 1; n <= o.y && n <= o.q; ++n)
        f = f + shift(reciprocal(pochhammer(x, n)), {1, n, n, 0});
    return f;
}

MultiSeries gen_stack_perimeter(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), y = vy(o);
    return x * y * (one - x) * reciprocal(pow(one - x, 2) - y);
}

MultiSeries gen_stack_complete(TruncOrder o) {
    MultiSeries x = vx(o);
    MultiSeries f = MultiSeries::zero(o);
    for (int n = 1; n <= o.y && n <= o.q; ++n)
        f = f + shift(reciprocal(pochhammer(x, n - 1) * pochhammer(x, n)), {1, n, n, 0});
    return f;
}

MultiSeries gen_staircase_perimeter(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), y = vy(o);
    MultiSeries rad = sqrt(one - rat(2) * x - rat(2) * y - rat(2) * x * y + x * x + y * y);
    return rat(1, 2) * (one - x - y - rad);
}

// y J1/J0 with the two alternating q-hypergeometric sums; the k-th summand
// carries x^k q^{k(k+1)/2}.
MultiSeries gen_staircase_complete(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), y = vy(o);
    MultiSeries j0 = MultiSeries::zero(o), j1 = MultiSeries::zero(o);
    for (int k = 0; k <= o.x && k * (k + 1) / 2 <= o.q; ++k) {
        Rational sign = (k % 2 == 0) ? rat(1) : rat(-1);
        Expo e{k, 0, k * (k + 1) / 2, 0};
        j0 = j0 + shift(reciprocal(pochhammer(one, k) * pochhammer(y, k)), e, sign);
        if (k >= 1)
            j1 = j1 + shift(reciprocal(pochhammer(one, k - 1) * pochhammer(y, k)), e, -sign);
    }
    return y * j1 * reciprocal(j0);
}

MultiSeries gen_cc_area(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), q = vq(o);
    MultiSeries den = one - rat(5) * q + rat(7) * q * q - rat(4) * q * q * q;
    return q * pow(one - q, 3) * reciprocal(den);
}

MultiSeries gen_dcc_area(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), q = vq(o);
    return q * (one - q) * reciprocal(one - rat(3) * q + q * q);
}

// (1-y)(1 - 2*sqrt2/(3*sqrt2 - sqrt R)) with R = 1 + x + sqrt((1-x)^2 -
// 16xy/(1-y)^2). The surds are cleared by conjugation: the expression
// equals (1-y)(6 - R - 2 sqrt(2R))/(18 - R), and the inner radicand is
// expanded as sqrt(P)/(1-y) with the polynomial P = ((1-x)(1-y))^2 - 16xy,
// keeping every step inside series arithmetic. The branch with zero
// constant term is the counting series (asserted against enumeration in the
// tests); the other roots of the underlying quartic start at 1/2 and 1/3.
MultiSeries gen_cc_perimeter(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), y = vy(o);
    MultiSeries p = pow((one - x) * (one - y), 2) - rat(16) * x * y;
    MultiSeries r = one + x + sqrt(p) * reciprocal(one - y);
    MultiSeries g = sqrt(rat(2) * r);
    return (one - y) * (rat(6) * one - r - rat(2) * g) * reciprocal(rat(18) * one - r);
}

// The root with zero constant term of C^3 + 2(y-1)C^2 + (y-1)(x+y-1)C +
// xy(y-1) = 0, lifted by Newton from the empty seed.
MultiSeries gen_dcc_perimeter(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), y = vy(o);
    AlgebraicEquation eq;
    eq.coeffs = {x * y * (y - one), (y - one) * (x + y - one), rat(2) * (y - one), one};
    eq.seed = MultiSeries::zero(o);
    return newton_algebraic(eq, o);
}

// y (1-y) X / (1 + W + y X), with the pole of X and W at y = 1 cleared by
// multiplying through by (1-y): both (1-y)X and (1-y)W are plain series.
// The n-th summands carry x^n q^{n(n+1)/2}.
MultiSeries gen_cc_complete(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), y = vy(o);
    MultiSeries y2 = y * y;
    MultiSeries xx = shift(reciprocal(pochhammer(y, 1)), {1, 0, 1, 0});  // (1-y) X
    MultiSeries ww = MultiSeries::zero(o);                               // (1-y) W
    for (int n = 1; n <= o.x && n * (n + 1) / 2 <= o.q; ++n) {
        Expo e{n, 0, n * (n + 1) / 2, 0};
        Rational sign = (n % 2 == 0) ? rat(1) : rat(-1);
        if (n >= 2) {
            MultiSeries num = pow(one - y, 2 * n - 3) * pochhammer(y2, 2 * n - 2);
            MultiSeries den = pochhammer(one, n - 1) * pochhammer(y, n - 2) *
                              pow(pochhammer(y, n - 1), 2) * pochhammer(y, n) *
                              pochhammer(y2, n - 1);
            xx = xx + shift(num * reciprocal(den), e, -sign);
        }
        MultiSeries num = pow(one - y, 2 * n - 2) * pochhammer(y2, 2 * n - 1);
        MultiSeries den = pochhammer(one, n) * pow(pochhammer(y, n - 1), 3) *
                          pochhammer(y, n) * pochhammer(y2, n - 1);
        ww = ww + shift(num * reciprocal(den), e, sign);
    }
    return y * (one - y) * xx * reciprocal((one - y) + ww + y * xx);
}

MultiSeries gen_directed_area(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), q = vq(o);
    return rat(1, 2) * (sqrt((one + q) * reciprocal(one - rat(3) * q)) - one);
}

MultiSeries gen_directed_area_rsp(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), q = vq(o);
    MultiSeries den = one - q * (rat(2) * one + x) + q * q * (one - x);
    MultiSeries rad = sqrt((one + q) * (one + q - q * x) * reciprocal(den));
    return shift(rad - one, {1, 0, 0, 0}, rat(1, 2));
}

MultiSeries gen_triangular_directed(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), q = vq(o);
    return rat(1, 2) * sqrt((one + q - q * x) * reciprocal(one - rat(3) * q - q * x));
}

MultiSeries gen_triangular_directed_corrected(TruncOrder o) {
    return gen_triangular_directed(o) - rat(1, 2);
}

MultiSeries gen_sap_strip2(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), y = vy(o);
    MultiSeries num = rat(2) * one - rat(2) * x + y + rat(3) * x * y;
    return x * y * num * reciprocal(pow(one - x, 2) - rat(2) * x * x * y);
}

MultiSeries gen_sap_strip3(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o), x = vx(o), y = vy(o);
    MultiSeries xp1 = one + x, xm1 = x - one;
    MultiSeries num = rat(3) * pow(xp1, 2) * pow(one - x, 5) +
                      poly_x(o, {2, 5}) * poly_x(o, {-1, 2}) * pow(xp1, 2) * pow(xm1, 3) * y -
                      xm1 * poly_x(o, {1, 8, 11, -6, -18, 4, 6}) * y * y -
                      x * xp1 * poly_x(o, {1, 4, -8, 6, 2}) * y * y * y;
    MultiSeries den = pow(xp1, 2) * pow(xm1, 6) -
                      x * poly_x(o, {1, 4}) * pow(xp1, 2) * pow(xm1, 4) * y +
                      x * x * poly_x(o, {-3, -8, -6, 4, 3}) * pow(xm1, 2) * y * y +
                      x * x * x * xp1 * poly_x(o, {3, -5, 3, 1}) * y * y * y;
    return x * y * num * reciprocal(den);
}

MultiSeries gen_sap_strip3_iso(TruncOrder o) {
    MultiSeries num = shift(poly_x(o, {3, -7, 3, 7, -1, -1, -20, 10, 4, -8}), {2, 0, 0, 0});
    MultiSeries den = poly_x(o, {1, -4, 3, 2, -4, 2, -1, 8, -5, -2, 4});
    return num * reciprocal(den);
}

using Gen = MultiSeries (*)(TruncOrder);

const std::map<std::string, Gen>& catalog() {
    static const std::map<std::string, Gen> table = {
        {"bargraph_area", gen_bargraph_area},
        {"bargraph_perimeter", gen_bargraph_perimeter},
        {"bargraph_width_area", gen_bargraph_width_area},
        {"bargraph_complete", gen_bargraph_complete},
        {"ferrers_perimeter", gen_ferrers_perimeter},
        {"ferrers_perimeter_iso", gen_ferrers_perimeter_iso},
        {"ferrers_complete", gen_ferrers_complete},
        {"stack_perimeter", gen_stack_perimeter},
        {"stack_complete", gen_stack_complete},
        {"staircase_perimeter", gen_staircase_perimeter},
        {"staircase_complete", gen_staircase_complete},
        {"cc_area", gen_cc_area},
        {"cc_perimeter", gen_cc_perimeter},
        {"cc_complete", gen_cc_complete},
        {"dcc_area", gen_dcc_area},
        {"dcc_perimeter", gen_dcc_perimeter},
        {"directed_area", gen_directed_area},
        {"directed_area_rsp", gen_directed_area_rsp},
        {"triangular_directed", gen_triangular_directed},
        {"triangular_directed_corrected", gen_triangular_directed_corrected},
        {"sap_strip2", gen_sap_strip2},
        {"sap_strip3", gen_sap_strip3},
        {"sap_strip3_iso", gen_sap_strip3_iso},
    };
    return table;
}

}  // namespace

std::vector<std::string> formula_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, gen] : catalog()) ids.push_back(id);
    return ids;
}

MultiSeries evaluate(const std::string& id, TruncOrder order) {
    auto it = catalog().find(id);
    if (it == catalog().end()) throw UnknownFormula("no formula named '" + id + "'");
    return it->second(order);
}

std::vector<RatFun> cc_automaton_states(bool directed) {
    // States 2..5 of the prefix automaton; state 1 is the empty prefix.
    // Unknowns u = (L2, L3, L4, L5), one balance equation per state. The
    // directed variant loses the transitions adding a cell below the first
    // cell of its column, after which state 5 feeds nothing.
    Poly2 one = Poly2::constant(1);
    Poly2 q = Poly2::monomial(1, 0);
    Poly2 z = Poly2();
    std::vector<std::vector<Poly2>> m;
    if (directed) {
        m = {{one - q, -q, -q, z},
             {-q, one - q, z, z},
             {-q, -q, one - q, z},
             {-q, -q, z, one - q}};
    } else {
        m = {{one - q, -q, -q, z},
             {-q, one - rat(2) * q, z, z},
             {-q, -q, one - q, -q},
             {-q, rat(-2) * q, z, one - q}};
    }
    std::vector<Poly2> rhs = {q, z, z, z};
    std::vector<RatFun> sol = solve_poly_system(m, rhs);
    std::vector<RatFun> states = {RatFun::poly(one)};
    states.insert(states.end(), sol.begin(), sol.end());
    return states;
}

RatFun cc_area_via_automaton() {
    auto states = cc_automaton_states(false);
    return states[1] + states[2];
}

RatFun dcc_area_via_automaton() {
    auto states = cc_automaton_states(true);
    return states[1] + states[2];
}

MultiSeries heap_system_directed_area(TruncOrder order) {
    MultiSeries one = MultiSeries::one(order), q = MultiSeries::var(order, VQ);
    AlgebraicEquation eq;
    eq.coeffs = {q, q - one, q};  // H = q(1 + H + H^2)
    eq.seed = MultiSeries::zero(order);
    MultiSeries h = newton_algebraic(eq, order);
    return h * reciprocal(one - h);  // pyramids: D = H(1 + D)
}

}  // namespace polyenum
