#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyenum/errors.hpp"
#include "polyenum/series.hpp"

using namespace polyenum;

namespace {

// Deterministic pseudo-random series; the engine itself has no randomness,
// so property tests use a fixed-seed LCG and are byte-reproducible.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint32_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>(state >> 33);
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

MultiSeries random_series(Lcg& rng, TruncOrder o, int nterms, bool unit_constant = false) {
    MultiSeries r = unit_constant ? MultiSeries::one(o) : MultiSeries::zero(o);
    for (int i = 0; i < nterms; ++i) {
        Expo e{rng.range(0, o.x), rng.range(0, o.y), rng.range(0, o.q), rng.range(0, o.s)};
        if (unit_constant && e == Expo{0, 0, 0, 0}) continue;
        r.add_term(e, rat(rng.range(-9, 9), rng.range(1, 5)));
    }
    return r;
}

const TruncOrder kSmall{4, 4, 5, 5};

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(rat_from_string("3/6") == Rational(1, 2));
    CHECK(rat_from_string("-7") == Rational(-7));
    CHECK(rat_to_string(rat(22, 4)) == "11/2");
    CHECK_THROWS_AS(rat_from_string("2/x"), std::invalid_argument);
    CHECK(*rat_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(*rat_sqrt(Rational(0)) == 0);
    CHECK(!rat_sqrt(Rational(2)).has_value());
    CHECK(!rat_sqrt(Rational(-4)).has_value());
}

TEST_CASE("canonical term map: no zeros, truncation enforced") {
    MultiSeries a = MultiSeries::zero(kSmall);
    a.add_term({1, 0, 0, 0}, Rational(1, 2));
    a.add_term({1, 0, 0, 0}, Rational(-1, 2));
    CHECK(a.is_zero());
    a.add_term({9, 0, 0, 0}, 3);  // beyond the x cap: silently dropped
    CHECK(a.is_zero());
    a.add_term({2, 1, 0, 0}, 5);
    CHECK(a.term_count() == 1);
    CHECK(a.coeff(2, 1) == 5);
    CHECK_THROWS_AS(a.coeff(5, 0, 0, 0), OutOfTruncation);
}

TEST_CASE("geometric series 1/(1-2q) = sum 2^n q^n") {
    TruncOrder o = TruncOrder::qonly(12);
    MultiSeries den = Rational(1) - Rational(2) * MultiSeries::var(o, VQ);
    MultiSeries g = reciprocal(den);
    Rational expect = 1;
    for (int n = 0; n <= 12; ++n) {
        CHECK(g.coeff(0, 0, n) == expect);
        expect *= 2;
    }
    CHECK(g * den == MultiSeries::one(o));
}

TEST_CASE("coefficient of x y in 1/(1-x-y) is 2") {
    TruncOrder o = TruncOrder::xy(6);
    MultiSeries den = Rational(1) - MultiSeries::var(o, VX) - MultiSeries::var(o, VY);
    MultiSeries g = reciprocal(den);
    CHECK(g.coeff(1, 1) == 2);
    // binomial coefficients throughout: [x^a y^b] = C(a+b, a)
    CHECK(g.coeff(2, 3) == 10);
    CHECK(g.coeff(3, 3) == 20);
}

TEST_CASE("reciprocal requires invertible constant") {
    CHECK_THROWS_AS(reciprocal(MultiSeries::var(kSmall, VX)), ZeroConstantTerm);
    CHECK_THROWS_AS(reciprocal(MultiSeries::zero(kSmall)), ZeroConstantTerm);
}

TEST_CASE("sqrt of (1+x)^2 and error cases") {
    TruncOrder o = TruncOrder::xy(6);
    MultiSeries onepx = MultiSeries::one(o) + MultiSeries::var(o, VX);
    CHECK(sqrt(onepx * onepx) == onepx);
    // sqrt(1+x) squared returns 1+x
    MultiSeries r = sqrt(onepx);
    CHECK(r * r == onepx);
    CHECK(r.coeff(1, 0) == Rational(1, 2));
    CHECK(r.coeff(2, 0) == Rational(-1, 8));
    MultiSeries c4 = onepx + Rational(3);  // constant 4: fine
    CHECK(sqrt(c4 * c4) == c4);
    CHECK_THROWS_AS(sqrt(MultiSeries::constant(o, 2) + MultiSeries::var(o, VX)), NonSquareConstant);
    CHECK_THROWS_AS(sqrt(MultiSeries::var(o, VX)), NonSquareConstant);
}

TEST_CASE("ring laws on deterministic pseudo-random series") {
    Lcg rng(20260823);
    for (int trial = 0; trial < 60; ++trial) {
        MultiSeries a = random_series(rng, kSmall, 8);
        MultiSeries b = random_series(rng, kSmall, 8);
        MultiSeries c = random_series(rng, kSmall, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiSeries::zero(kSmall));
        CHECK(a * MultiSeries::one(kSmall) == a);
    }
}

TEST_CASE("reciprocal and sqrt round-trips (100 cases each)") {
    Lcg rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        MultiSeries a = random_series(rng, kSmall, 6, /*unit_constant=*/true);
        CHECK(a * reciprocal(a) == MultiSeries::one(kSmall));
        CHECK(sqrt(a * a) == a);
    }
}

TEST_CASE("pochhammer (xq)_n") {
    TruncOrder o{3, 0, 8, 0};
    MultiSeries x = MultiSeries::var(o, VX);
    CHECK(pochhammer(x, 0) == MultiSeries::one(o));
    // (xq)_2 = (1-xq)(1-xq^2) = 1 - xq - xq^2 + x^2 q^3
    MultiSeries p2 = pochhammer(x, 2);
    CHECK(p2.coeff(0, 0, 0) == 1);
    CHECK(p2.coeff(1, 0, 1) == -1);
    CHECK(p2.coeff(1, 0, 2) == -1);
    CHECK(p2.coeff(2, 0, 3) == 1);
    CHECK(p2.term_count() == 4);
    // once q^i exceeds the cap the remaining factors are 1: stable value
    CHECK(pochhammer(x, 50) == pochhammer(x, 8));
}

TEST_CASE("substitution s -> s q^j is a ring morphism") {
    Lcg rng(7);
    TruncOrder o{3, 3, 8, 8};
    for (int trial = 0; trial < 25; ++trial) {
        MultiSeries a = random_series(rng, o, 6);
        MultiSeries b = random_series(rng, o, 6);
        for (int j : {1, 2}) {
            CHECK(subst_s_times_q(a + b, j) == subst_s_times_q(a, j) + subst_s_times_q(b, j));
            CHECK(subst_s_times_q(a * b, j) == subst_s_times_q(a, j) * subst_s_times_q(b, j));
        }
        CHECK(subst_x_times_q(a * b, 1) == subst_x_times_q(a, 1) * subst_x_times_q(b, 1));
    }
    MultiSeries s = MultiSeries::var(o, VS);
    MultiSeries sq = shift(s, {0, 0, 2, 0});
    CHECK(subst_s_times_q(s, 2) == sq);
}

TEST_CASE("eval_s_one and d_ds_at_one") {
    TruncOrder o{2, 0, 6, 6};
    // a = s q + 3 s^2 q^2 + x q^3
    MultiSeries a = MultiSeries::monomial(o, {0, 0, 1, 1}) +
                    Rational(3) * MultiSeries::monomial(o, {0, 0, 2, 2}) +
                    MultiSeries::monomial(o, {1, 0, 3, 0});
    MultiSeries at1 = eval_s_one(a);
    CHECK(at1.coeff(0, 0, 1) == 1);
    CHECK(at1.coeff(0, 0, 2) == 3);
    CHECK(at1.coeff(1, 0, 3) == 1);
    MultiSeries d1 = d_ds_at_one(a);
    CHECK(d1.coeff(0, 0, 1) == 1);
    CHECK(d1.coeff(0, 0, 2) == 6);
    CHECK(d1.coeff(1, 0, 3) == 0);

    MultiSeries bad = MultiSeries::monomial(o, {0, 0, 1, 2});  // e_s > e_q
    CHECK_THROWS_AS(eval_s_one(bad), NotSDominated);
    // s cap below q cap: the sum over s-degrees would be incomplete
    MultiSeries short_s = MultiSeries::monomial(TruncOrder{2, 0, 6, 3}, {0, 0, 1, 1});
    CHECK_THROWS_AS(eval_s_one(short_s), NotSDominated);
}

TEST_CASE("eval_s_one of subst_s_times_q recovers q-shifted evaluation") {
    // For a series in s with e_s <= e_q, (s -> sq) then s = 1 equals
    // reading off sum_h a_h q^h extra; spot-check against a hand example.
    TruncOrder o{0, 0, 6, 6};
    MultiSeries a = MultiSeries::monomial(o, {0, 0, 1, 1}) +
                    Rational(2) * MultiSeries::monomial(o, {0, 0, 3, 2});
    MultiSeries b = eval_s_one(subst_s_times_q(a, 1));
    CHECK(b.coeff(0, 0, 2) == 1);   // s q -> s q^2
    CHECK(b.coeff(0, 0, 5) == 2);   // s^2 q^3 -> s^2 q^5
}

TEST_CASE("substitute_xy_t merges x and y into the t slot") {
    TruncOrder o = TruncOrder::xy(5);
    MultiSeries den = Rational(1) - MultiSeries::var(o, VX) - MultiSeries::var(o, VY);
    MultiSeries iso = substitute_xy_t(reciprocal(den));
    // 1/(1-2t): coefficient 2^n
    CHECK(iso.order().x == 5);
    CHECK(iso.order().y == 0);
    Rational p = 1;
    for (int n = 0; n <= 5; ++n, p *= 2) CHECK(iso.coeff(n, 0) == p);
}

TEST_CASE("eval_var_one with q domination") {
    TruncOrder o{6, 0, 6, 0};
    // sum_k x^k q^k: x = 1 gives sum q^k
    MultiSeries a(o);
    for (int k = 0; k <= 6; ++k) a.add_term({k, 0, k, 0}, 1);
    MultiSeries e = eval_var_one(a, VX);
    for (int k = 0; k <= 6; ++k) CHECK(e.coeff(0, 0, k) == 1);
    MultiSeries bad = MultiSeries::monomial(o, {2, 0, 1, 0});
    CHECK_THROWS_AS(eval_var_one(bad, VX), NotSDominated);
}

TEST_CASE("div_monomial") {
    TruncOrder o = TruncOrder::xy(4);
    MultiSeries a = MultiSeries::monomial(o, {2, 1, 0, 0}, 6) + MultiSeries::monomial(o, {1, 2, 0, 0}, 4);
    MultiSeries d = div_monomial(a, {1, 1, 0, 0});
    CHECK(d.coeff(1, 0) == 6);
    CHECK(d.coeff(0, 1) == 4);
    CHECK_THROWS_AS(div_monomial(a, {3, 0, 0, 0}), std::domain_error);
}

TEST_CASE("equality on the meet of truncation orders") {
    TruncOrder o1 = TruncOrder::xy(6), o2 = TruncOrder::xy(3);
    MultiSeries a = reciprocal(Rational(1) - MultiSeries::var(o1, VX));
    MultiSeries b = reciprocal(Rational(1) - MultiSeries::var(o2, VX));
    CHECK(a == b);  // agree up to x^3
    MultiSeries c = b + MultiSeries::monomial(o2, {2, 0, 0, 0}, Rational(1, 7));
    CHECK(a != c);
}

TEST_CASE("json round-trip is canonical and byte-stable") {
    Lcg rng(99);
    MultiSeries a = random_series(rng, kSmall, 10);
    std::string j = a.to_json();
    MultiSeries b = MultiSeries::from_json(j);
    CHECK(a == b);
    CHECK(a.order() == b.order());
    CHECK(b.to_json() == j);
    // worked shape
    MultiSeries m = MultiSeries::monomial(TruncOrder{1, 1, 0, 0}, {1, 1, 0, 0}, Rational(3, 2));
    CHECK(m.to_json() ==
          R"({"vars":["x","y","q","s"],"order":[1,1,0,0],"terms":[{"e":[1,1,0,0],"n":"3","d":"2"}]})");
}

TEST_CASE("to_string is readable and deterministic") {
    TruncOrder o = TruncOrder::xyq(2, 2);
    MultiSeries a = MultiSeries::one(o) - MultiSeries::var(o, VX) +
                    MultiSeries::monomial(o, {1, 1, 2, 0}, Rational(-5, 3));
    CHECK(a.to_string() == "1 - x - 5/3*x*y*q^2");
    CHECK(MultiSeries::zero(o).to_string() == "0");
}
