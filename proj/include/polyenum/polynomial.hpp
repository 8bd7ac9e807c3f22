#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "polyenum/rational.hpp"
#include "polyenum/series.hpp"

namespace polyenum {

// ---- dense univariate polynomials over Q --------------------------------

// Coefficient list, index = degree, no trailing zeros (canonical).
using PolyU = std::vector<Rational>;

PolyU pu_trim(PolyU p);
int pu_deg(const PolyU& p);  // -1 for the zero polynomial
PolyU pu_add(const PolyU& a, const PolyU& b);
PolyU pu_sub(const PolyU& a, const PolyU& b);
PolyU pu_mul(const PolyU& a, const PolyU& b);
PolyU pu_scale(const PolyU& a, const Rational& c);
Rational pu_eval(const PolyU& p, const Rational& t);
PolyU pu_derivative(const PolyU& p);
// Euclidean remainder a mod b, b nonzero.
PolyU pu_rem(const PolyU& a, const PolyU& b);
// Exact quotient; throws std::logic_error if division is not exact.
PolyU pu_divexact(const PolyU& a, const PolyU& b);
// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
PolyU pu_gcd(PolyU a, PolyU b);
std::string pu_to_string(const PolyU& p, const std::string& var);

// ---- sparse bivariate polynomials over Q --------------------------------

// Two variable slots whose names are contextual (strip transfer works in
// (x, z) with z^2 = y, the area automaton in (q, -), isotropic forms in
// (t, -)). Canonical form: no zero coefficients, map order deterministic.
class Poly2 {
  public:
    using Key = std::array<int, 2>;  // (deg in var A, deg in var B)
    using TermMap = std::map<Key, Rational>;

    Poly2() = default;
    static Poly2 constant(const Rational& c);
    static Poly2 monomial(int da, int db, const Rational& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int deg(int var) const;
    Rational coeff(int da, int db) const;
    void add_term(int da, int db, const Rational& c);

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    std::string to_string(const std::string& va, const std::string& vb) const;

  private:
    TermMap terms_;
};

Poly2 operator+(const Poly2& a, const Poly2& b);
Poly2 operator-(const Poly2& a, const Poly2& b);
Poly2 operator-(const Poly2& a);
Poly2 operator*(const Poly2& a, const Poly2& b);
Poly2 operator*(const Rational& c, const Poly2& a);

// Exact division; throws std::logic_error when the division leaves a
// remainder (never happens in fraction-free elimination).
Poly2 p2_divexact(const Poly2& a, const Poly2& b);

// gcd up to a scalar, normalized so the lexicographically smallest term
// has coefficient 1. Computed as content/primitive-part split w.r.t. var B
// with a primitive pseudo-remainder sequence.
Poly2 p2_gcd(const Poly2& a, const Poly2& b);

// Substitutions.
Poly2 p2_subst_b_squared(const Poly2& a);          // B^2 -> B (z^2 = y); odd B-degree throws
PolyU p2_collapse_iso(const Poly2& a);             // A = B = t
PolyU p2_to_univariate(const Poly2& a, int var);   // other variable must not occur
Poly2 p2_swap_vars(const Poly2& a);

// Expansion into the truncated-series world: slot sa carries var A, slot
// sb carries var B (ignored if the polynomial does not use B).
MultiSeries p2_to_series(const Poly2& a, TruncOrder o, Var sa, Var sb);

// ---- rational functions --------------------------------------------------

// num/den over Q[A,B], kept reduced (gcd 1) and normalized: the
// denominator's lexicographically smallest nonzero term has coefficient 1.
struct RatFun {
    Poly2 num;
    Poly2 den = Poly2::constant(1);

    static RatFun from(const Poly2& n, const Poly2& d);  // reduces + normalizes
    static RatFun poly(const Poly2& n) { return {n, Poly2::constant(1)}; }

    bool is_zero() const { return num.is_zero(); }
    std::string to_string(const std::string& va, const std::string& vb) const;
};

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator*(const RatFun& a, const RatFun& b);
RatFun rf_div(const RatFun& a, const RatFun& b);
bool operator==(const RatFun& a, const RatFun& b);

// z^2 = y rewrite for a reduced rational function whose value is even in
// z: multiplies by the denominator's z-conjugate when needed.
RatFun rf_subst_b_squared(const RatFun& a);

MultiSeries rf_to_series(const RatFun& a, TruncOrder o, Var sa, Var sb);

// ---- exact linear algebra ------------------------------------------------

// Solves M u = rhs over the rational-function field, entries polynomial.
// Forward elimination is fraction-free (Bareiss exact-division updates,
// pivot rows chosen by fewest terms); back-substitution reduces. Throws
// SingularSystem when M is singular.
std::vector<RatFun> solve_poly_system(std::vector<std::vector<Poly2>> M, std::vector<Poly2> rhs);

// ---- univariate real-root machinery -------------------------------------

// Number of distinct real roots of p in the half-open interval (a, b].
int pu_count_roots(const PolyU& p, const Rational& a, const Rational& b);

// Smallest real root of p in (0, 1], isolated by Sturm counts + bisection
// until the enclosure is tighter than `width`. Throws NoPositiveRoot if p
// has no root there.
std::pair<Rational, Rational> pu_smallest_root_unit(const PolyU& p, const Rational& width);

// Decimal expansion of t^(-1/2) for t enclosed by [lo, hi], correct to
// `digits` places (both endpoints must agree after rounding; tighten the
// enclosure until they do before calling).
std::string inverse_sqrt_decimal(const Rational& lo, const Rational& hi, int digits);

}  // namespace polyenum
