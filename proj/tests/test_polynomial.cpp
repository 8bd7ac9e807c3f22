#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyenum/errors.hpp"
#include "polyenum/polynomial.hpp"

using namespace polyenum;

namespace {

Poly2 P(std::initializer_list<std::array<long, 3>> terms) {
    Poly2 p;
    for (const auto& t : terms) p.add_term(static_cast<int>(t[0]), static_cast<int>(t[1]), Rational(t[2]));
    return p;
}

}  // namespace

TEST_CASE("univariate arithmetic and gcd") {
    PolyU a{Rational(-1), Rational(0), Rational(1)};  // t^2 - 1
    PolyU b{Rational(1), Rational(1)};                // t + 1
    CHECK(pu_deg(a) == 2);
    CHECK(pu_mul(b, PolyU{Rational(-1), Rational(1)}) == a);
    CHECK(pu_divexact(a, b) == PolyU{Rational(-1), Rational(1)});
    CHECK(pu_gcd(a, b) == b);  // monic already
    CHECK(pu_rem(a, b).empty());
    CHECK(pu_eval(a, Rational(3)) == 8);
    CHECK(pu_derivative(a) == PolyU{Rational(0), Rational(2)});
    CHECK_THROWS_AS(pu_divexact(b, a), std::logic_error);
    CHECK(pu_to_string(a, "t") == "-1 + t^2");
}

TEST_CASE("bivariate gcd recovers a planted common factor") {
    Poly2 g = P({{0, 0, 1}, {1, 0, -2}, {0, 1, 1}});      // 1 - 2x + z
    Poly2 u = P({{0, 0, 3}, {2, 1, 5}});                  // 3 + 5 x^2 z
    Poly2 v = P({{1, 0, 1}, {0, 2, -7}, {1, 1, 1}});      // x - 7z^2 + xz
    Poly2 got = p2_gcd(g * u, g * v);
    // normalization: lex-smallest term gets coefficient 1; g already has it
    CHECK(got == g);
    CHECK(p2_divexact(g * u, g) == u);
    CHECK(p2_gcd(u, v) == Poly2::constant(1));
}

TEST_CASE("bivariate exact division errors on non-divisible input") {
    Poly2 a = P({{1, 1, 1}});
    Poly2 b = P({{0, 0, 1}, {1, 0, 1}});
    CHECK_THROWS_AS(p2_divexact(a, b), std::logic_error);
}

TEST_CASE("rational function reduction and normalization") {
    // (1-x^2) / (2 - 2x)  ==  (1+x) / 2 -> normalized denominator "1"
    Poly2 n = P({{0, 0, 1}, {2, 0, -1}});
    Poly2 d = P({{0, 0, 2}, {1, 0, -2}});
    RatFun r = RatFun::from(n, d);
    CHECK(r.den == Poly2::constant(1));
    CHECK(r.num == rat(1, 2) * P({{0, 0, 1}, {1, 0, 1}}));
    RatFun s = RatFun::from(P({{0, 0, 1}}), P({{0, 0, 1}, {1, 0, -1}}));
    RatFun t = s * RatFun::from(P({{0, 0, 1}, {1, 0, -1}}), P({{0, 0, 1}}));
    CHECK(t == RatFun::poly(Poly2::constant(1)));
    CHECK(s.to_string("x", "z") == "(1) / (1 - x)");
}

TEST_CASE("z^2 -> y rewrite, including the odd/odd case") {
    // (x z) / (z) is even in value; reduction already cancels z here, so
    // force the conjugate path with (z + z^3)/(z - z^3) = (1+z^2)/(1-z^2).
    RatFun r{P({{0, 1, 1}, {0, 3, 1}}), P({{0, 1, 1}, {0, 3, -1}})};
    RatFun e = rf_subst_b_squared(r);
    CHECK(e.num == P({{0, 0, 1}, {0, 1, 1}}));
    CHECK(e.den == P({{0, 0, 1}, {0, 1, -1}}));
}

TEST_CASE("fraction-free solve against a hand-checked 2x2 system") {
    // (1-x) u - z v = 1 ; -z u + (1+x) v = x
    std::vector<std::vector<Poly2>> M = {
        {P({{0, 0, 1}, {1, 0, -1}}), P({{0, 1, -1}})},
        {P({{0, 1, -1}}), P({{0, 0, 1}, {1, 0, 1}})},
    };
    std::vector<Poly2> rhs = {P({{0, 0, 1}}), P({{1, 0, 1}})};
    auto u = solve_poly_system(M, rhs);
    // det = (1-x)(1+x) - z^2 = 1 - x^2 - z^2
    Poly2 det = P({{0, 0, 1}, {2, 0, -1}, {0, 2, -1}});
    CHECK(u[0] == RatFun::from(P({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}), det));
    CHECK(u[1] == RatFun::from(P({{0, 1, 1}, {1, 0, 1}, {2, 0, -1}}), det));
    // residual check: M u - rhs = 0
    for (int i = 0; i < 2; ++i) {
        RatFun acc = RatFun::poly(-rhs[i]);
        for (int j = 0; j < 2; ++j) acc = acc + RatFun::poly(M[i][j]) * u[j];
        CHECK(acc.is_zero());
    }
    std::vector<std::vector<Poly2>> sing = {{P({{0, 0, 1}}), P({{0, 0, 2}})},
                                            {P({{0, 0, 2}}), P({{0, 0, 4}})}};
    CHECK_THROWS_AS(solve_poly_system(sing, rhs), SingularSystem);
}

TEST_CASE("series expansion of a rational function") {
    // 1/(1 - x - zx): series in (x, z)
    RatFun r = RatFun::from(P({{0, 0, 1}}), P({{0, 0, 1}, {1, 0, -1}, {1, 1, -1}}));
    TruncOrder o{4, 0, 0, 4};  // A -> x slot, B -> s slot (arbitrary here)
    MultiSeries g = rf_to_series(r, o, VX, VS);
    CHECK(g.coeff(2, 0, 0, 1) == 2);  // x^2 terms: (1+z)^2 = 1 + 2z + z^2
    CHECK(g.coeff(3, 0, 0, 3) == 1);
}

TEST_CASE("sturm root counting") {
    PolyU p{Rational(1), Rational(-2)};  // 1 - 2t, root 1/2
    CHECK(pu_count_roots(p, 0, 1) == 1);
    CHECK(pu_count_roots(p, rat(1, 2), 1) == 0);  // (1/2, 1] excludes the root
    CHECK(pu_count_roots(p, rat(1, 4), rat(1, 2)) == 1);
    // (t^2 - 2)(t - 1): roots sqrt(2), -sqrt(2), 1; in (0,1] exactly one
    PolyU q = pu_mul(PolyU{Rational(-2), Rational(0), Rational(1)}, PolyU{Rational(-1), Rational(1)});
    CHECK(pu_count_roots(q, 0, 1) == 1);
    CHECK(pu_count_roots(q, 0, 2) == 2);
    // double root handled through the squarefree part: (1-2t)^2
    CHECK(pu_count_roots(pu_mul(p, p), 0, 1) == 1);
}

TEST_CASE("smallest root isolation and inverse sqrt digits") {
    // roots 1/4 and 3/4; smallest is 1/4, bound 1/sqrt(1/4) = 2
    PolyU p = pu_mul(PolyU{rat(-1, 4), Rational(1)}, PolyU{rat(-3, 4), Rational(1)});
    auto [lo, hi] = pu_smallest_root_unit(p, rat(1, 1000000));
    CHECK(lo < rat(1, 4));
    CHECK(hi >= rat(1, 4));
    CHECK(hi - lo <= rat(1, 1000000));
    CHECK(inverse_sqrt_decimal(lo, hi, 4) == "2.0000");
    CHECK_THROWS_AS(pu_smallest_root_unit(PolyU{Rational(1), Rational(1)}, rat(1, 100)),
                    NoPositiveRoot);
    // 1/sqrt(1/2) = 1.41421356...
    CHECK(inverse_sqrt_decimal(rat(1, 2), rat(1, 2), 6) == "1.414213");
}
