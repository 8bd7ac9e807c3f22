#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyenum/rational.hpp"

namespace polyenum {

// Variable slots, in the fixed order used everywhere (keys, JSON, printing).
enum Var : int { VX = 0, VY = 1, VQ = 2, VS = 3 };
constexpr int kNumVars = 4;
constexpr const char* kVarNames[kNumVars] = {"x", "y", "q", "s"};

using Expo = std::array<int, kNumVars>;  // exponent vector (e_x, e_y, e_q, e_s)

// Per-variable truncation caps. A cap applies to the variable's own total
// degree; kUncapped is only meaningful for variables a computation never
// produces (nothing enforces that — callers choose caps that make the
// coefficients they read complete).
struct TruncOrder {
    static constexpr int kUncapped = 1 << 28;

    int x = 0, y = 0, q = 0, s = 0;

    static TruncOrder xy(int m) { return {m, m, 0, 0}; }
    static TruncOrder xyq(int m, int k) { return {m, m, k, 0}; }
    static TruncOrder qonly(int k) { return {0, 0, k, 0}; }
    static TruncOrder xq(int m, int k) { return {m, 0, k, 0}; }
    static TruncOrder full(int m, int n, int k, int l) { return {m, n, k, l}; }

    int cap(int var) const;
    bool admits(const Expo& e) const;

    // Componentwise minimum: the order on which two series can be compared.
    TruncOrder meet(const TruncOrder& o) const;

    bool operator==(const TruncOrder& o) const = default;
    std::string to_string() const;
};

// Truncated formal power series over Q in (x, y, q, s). Canonical form:
// no zero coefficients stored, no term outside the truncation order,
// deterministic (lexicographic) term order by construction of std::map.
class MultiSeries {
  public:
    using TermMap = std::map<Expo, Rational>;

    MultiSeries() = default;
    explicit MultiSeries(TruncOrder order) : order_(order) {}

    static MultiSeries zero(TruncOrder order) { return MultiSeries(order); }
    static MultiSeries constant(TruncOrder order, const Rational& c);
    static MultiSeries one(TruncOrder order) { return constant(order, 1); }
    static MultiSeries monomial(TruncOrder order, const Expo& e, const Rational& c = 1);
    static MultiSeries var(TruncOrder order, Var v) {
        Expo e{0, 0, 0, 0};
        e[v] = 1;
        return monomial(order, e);
    }

    const TruncOrder& order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of x^ex y^ey q^eq s^es. Rejects queries outside the
    // truncation order (the value there is simply not known).
    const Rational& coeff(const Expo& e) const;
    Rational coeff(int ex, int ey, int eq = 0, int es = 0) const;

    Rational constant_term() const { return coeff({0, 0, 0, 0}); }

    // In-place term insertion (adds, truncates, drops zeros). Building block
    // for the free-function operations below.
    void add_term(const Expo& e, const Rational& c);

    // Restrict to a coarser (or equal) truncation order.
    MultiSeries truncated(TruncOrder order) const;

    // Equality compares canonical forms on the meet of the two orders.
    bool operator==(const MultiSeries& o) const;
    bool operator!=(const MultiSeries& o) const { return !(*this == o); }

    std::string to_string() const;

    // {"vars":[...],"order":[...],"terms":[{"e":[..],"n":"..","d":".."},..]}
    // Terms sorted lexicographically by exponent vector; byte-reproducible.
    std::string to_json() const;
    static MultiSeries from_json(const std::string& text);

  private:
    TruncOrder order_;
    TermMap terms_;
};

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const Rational& c, const MultiSeries& a);
MultiSeries operator*(const MultiSeries& a, const Rational& c);
MultiSeries operator+(const MultiSeries& a, const Rational& c);
MultiSeries operator-(const MultiSeries& a, const Rational& c);
MultiSeries operator-(const Rational& c, const MultiSeries& a);

// Multiply by the monomial c * x^e[0] y^e[1] q^e[2] s^e[3] (exponents may
// not be negative; use div_monomial for the inverse).
MultiSeries shift(const MultiSeries& a, const Expo& e, const Rational& c = 1);

// 1/a by Newton iteration (b <- b + b(1 - ab), quadratic convergence).
// Requires a nonzero constant term.
MultiSeries reciprocal(const MultiSeries& a);

// a/b == a * reciprocal(b).
MultiSeries divide(const MultiSeries& a, const MultiSeries& b);

// Square root with sqrt(constant term) rational (typically 1); Newton
// iteration b <- b + (a - b^2) / (2b).
MultiSeries sqrt(const MultiSeries& a);

// Exact division by a monomial: every term must be divisible.
MultiSeries div_monomial(const MultiSeries& a, const Expo& e);

// Integer power, n >= 0.
MultiSeries pow(const MultiSeries& a, int n);

// (aq)_n = (1 - aq)(1 - aq^2) ... (1 - aq^n). n = 0 gives 1.
MultiSeries pochhammer(const MultiSeries& a, int n);

// s -> s q^j : every monomial gains e_q += j * e_s. Truncation commutes
// with this map, so no information is lost at fixed order.
MultiSeries subst_s_times_q(const MultiSeries& a, int j);

// x -> x q^j, same mechanism on the x slot.
MultiSeries subst_x_times_q(const MultiSeries& a, int j);

// s = 1. Precondition: every stored monomial has e_s <= e_q and the s cap
// is at least the q cap, so the truncated sum over s-degrees is complete.
MultiSeries eval_s_one(const MultiSeries& a);

// d/ds at s = 1 (each term picks up a factor e_s). Same precondition.
MultiSeries d_ds_at_one(const MultiSeries& a);

// x = 1 / y = 1 with the analogous domination precondition against q.
MultiSeries eval_var_one(const MultiSeries& a, Var v);

// Isotropic projection x = y = t; t lives in the x slot of the result and
// its cap is min(x cap, y cap), the largest t-order that is complete.
MultiSeries substitute_xy_t(const MultiSeries& a);

// Read a univariate coefficient list [c_0 .. c_maxdeg] off a series living
// in a single variable slot (all other exponents must be 0).
std::vector<Rational> univariate_coeffs(const MultiSeries& a, Var v, int maxdeg);

}  // namespace polyenum
