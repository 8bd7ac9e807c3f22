#include "polyenum/funceq.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

#include "polyenum/closedform.hpp"
#include "polyenum/errors.hpp"

namespace polyenum {

namespace {

MultiSeries var_x(TruncOrder o) { return MultiSeries::var(o, VX); }
MultiSeries var_y(TruncOrder o) { return MultiSeries::var(o, VY); }
MultiSeries var_q(TruncOrder o) { return MultiSeries::var(o, VQ); }
MultiSeries var_s(TruncOrder o) { return MultiSeries::var(o, VS); }

// The solver's termination argument needs the inhomogeneous parts to vanish
// at s = 0 and the shifted-argument coefficient to pair every s with a q.
void check_contract(const LayeredEquation& eq) {
    if (eq.shift < 1) throw NonContractive("layered equation needs a positive shift");
    if (eq.U.empty() || eq.U.size() > 2)
        throw std::invalid_argument("layered equation carries 1 or 2 boundary unknowns, got " +
                                    std::to_string(eq.U.size()));
    auto s_positive = [](const MultiSeries& a, const char* part) {
        for (const auto& [e, c] : a.terms())
            if (e[VS] == 0)
                throw NonContractive(std::string(part) +
                                     " of a layered equation has a monomial free of s");
    };
    s_positive(eq.A, "the inhomogeneous part");
    for (const auto& u : eq.U) s_positive(u, "a boundary coefficient");
    for (const auto& [e, c] : eq.D.terms())
        if (e[VS] > 0 && e[VQ] == 0)
            throw NonContractive("the shifted-argument coefficient has an s monomial without q");
}

}  // namespace

LayeredSolution solve_layered(const LayeredEquation& eq, TruncOrder order) {
    check_contract(eq);
    if (order.q >= TruncOrder::kUncapped)
        throw std::invalid_argument("layered solving needs a finite q cap");
    MultiSeries a = eq.A.truncated(order);
    MultiSeries d = eq.D.truncated(order);
    std::vector<MultiSeries> u;
    for (const auto& ui : eq.U) u.push_back(ui.truncated(order));

    // Unroll B(s) = sum_k P_k (A + sum U_i u_i)(s q^{jk}) with
    // P_k = prod_{i<k} D(s q^{ij}). Every monomial of the inhomogeneous
    // parts has positive s-degree, so the k-th term's q-valuation is at
    // least jk and the sum is finite at fixed order.
    MultiSeries prod = MultiSeries::one(order);
    MultiSeries fa = MultiSeries::zero(order);
    std::vector<MultiSeries> fu(u.size(), MultiSeries::zero(order));
    for (int k = 0; k * eq.shift <= order.q; ++k) {
        if (k > 0) {
            prod = prod * subst_s_times_q(d, (k - 1) * eq.shift);
            if (prod.is_zero()) break;
        }
        fa = fa + prod * subst_s_times_q(a, k * eq.shift);
        for (std::size_t i = 0; i < u.size(); ++i)
            fu[i] = fu[i] + prod * subst_s_times_q(u[i], k * eq.shift);
    }

    // The boundary values live at s cap 0 (eval_s_one tightens the order);
    // widen them back so products with the s-carrying kernels keep their
    // s terms instead of meeting down to the s-free part.
    auto widen = [&order](const MultiSeries& a) {
        MultiSeries r(order);
        for (const auto& [e, c] : a.terms()) r.add_term(e, c);
        return r;
    };

    LayeredSolution sol;
    if (u.size() == 1) {
        // B(1) = fa(1) + fu(1) B(1).
        MultiSeries den = MultiSeries::one(order) - eval_s_one(fu[0]);
        if (den.constant_term() == 0)
            throw SingularLinearSystem("boundary elimination: 1 - U(1) not invertible");
        MultiSeries u1 = divide(eval_s_one(fa), den);
        sol.full = fa + fu[0] * widen(u1);
        sol.boundary = {u1};
    } else {
        // Evaluate at s = 1 and differentiate-then-evaluate to pin the two
        // unknowns u1 = B(1), u2 = dB/ds(1):
        //   (1 - b) u1 -      c  u2 = a0
        //       -bp u1 + (1 - cp) u2 = ap
        MultiSeries a0 = eval_s_one(fa), ap = d_ds_at_one(fa);
        MultiSeries b = eval_s_one(fu[0]), bp = d_ds_at_one(fu[0]);
        MultiSeries c = eval_s_one(fu[1]), cp = d_ds_at_one(fu[1]);
        MultiSeries one = MultiSeries::one(order);
        MultiSeries det = (one - b) * (one - cp) - c * bp;
        if (det.constant_term() == 0)
            throw SingularLinearSystem("boundary elimination: 2x2 determinant not invertible");
        MultiSeries u1 = divide(a0 * (one - cp) + c * ap, det);
        MultiSeries u2 = divide(ap * (one - b) + bp * a0, det);
        sol.full = fa + fu[0] * widen(u1) + fu[1] * widen(u2);
        sol.boundary = {u1, u2};
    }
    return sol;
}

// Bargraphs split by the last column: a single column, a column at least as
// high as its neighbour (duplicate, then grow upward), or a strictly lower
// one (a geometric sum over its height telescopes into the B(1)/B(sq)
// difference, merged into the two coefficients below).
LayeredEquation layered_bargraph(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o);
    MultiSeries x = var_x(o), y = var_y(o), sq = var_s(o) * var_q(o);
    LayeredEquation eq;
    eq.A = x * y * sq * reciprocal(one - y * sq);
    eq.U = {x * sq * reciprocal(one - sq)};
    eq.D = x * sq * (y - one) * reciprocal((one - sq) * (one - y * sq));
    return eq;
}

// Staircase polygons: either a single column, or glue a nonempty column to
// the previous one; configurations dropping below the previous column are
// subtracted by duplicating that column (s -> sq) and hanging the new one
// strictly lower. The glue square sits level with the top of the previous
// column, so only the cells above it (the 1/(1-ysq) factor) raise the
// vertical perimeter; the glue square itself carries no y.
LayeredEquation layered_staircase(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o);
    MultiSeries x = var_x(o), y = var_y(o), sq = var_s(o) * var_q(o);
    MultiSeries glue = x * sq * reciprocal((one - sq) * (one - y * sq));
    LayeredEquation eq;
    eq.A = x * y * sq * reciprocal(one - y * sq);
    eq.U = {glue};
    eq.D = -glue;
    return eq;
}

// Column-convex polygons: the new column may stick out above, below, both,
// or neither («contained»). The contained case attaches the column at a
// marked cell of the previous one, which is why the derivative dB/ds(1)
// (polygons with a marked cell in the last column) enters as a second
// boundary unknown.
LayeredEquation layered_column_convex(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o);
    MultiSeries x = var_x(o), y = var_y(o), s = var_s(o), q = var_q(o);
    MultiSeries sq = s * q;
    MultiSeries syq = s * y * q;
    MultiSeries d1 = reciprocal(one - sq);
    MultiSeries d2 = reciprocal(one - syq);
    LayeredEquation eq;
    eq.A = x * syq * d2;
    eq.U = {x * sq * sq * (rat(2) * y - syq - one) * d1 * d1 * d2,  // times B(1)
            x * sq * d1};                                          // times dB/ds(1)
    eq.D = x * sq * sq * pow(y - one, 2) * d1 * d1 * d2 * d2;
    return eq;
}

// Ferrers diagrams, width tracked in s (x -> xs in the column recursion
// F = xyq + xqF + yF(xq), then solved for the bare F(s)). No boundary
// unknown is needed; the solver's single linear relation is trivially
// satisfied by a zero coefficient.
LayeredEquation layered_ferrers(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o);
    MultiSeries y = var_y(o);
    MultiSeries xsq = var_x(o) * var_s(o) * var_q(o);
    MultiSeries g = reciprocal(one - xsq);
    LayeredEquation eq;
    eq.A = xsq * y * g;
    eq.U = {MultiSeries::zero(o)};
    eq.D = y * g;
    return eq;
}

// Stacks, width tracked in s like the Ferrers case; the recursion adds a
// column on the right after eliminating the descending phase, which squares
// the geometric factor.
LayeredEquation layered_stack(TruncOrder o) {
    MultiSeries one = MultiSeries::one(o);
    MultiSeries y = var_y(o);
    MultiSeries xsq = var_x(o) * var_s(o) * var_q(o);
    MultiSeries g = reciprocal(one - xsq);
    LayeredEquation eq;
    eq.A = xsq * y * g;
    eq.U = {MultiSeries::zero(o)};
    eq.D = y * g * g;
    return eq;
}

MultiSeries algebraic_residual(const AlgebraicEquation& eq, const MultiSeries& c) {
    MultiSeries r = MultiSeries::zero(c.order());
    for (auto it = eq.coeffs.rbegin(); it != eq.coeffs.rend(); ++it)
        r = r * c + it->truncated(c.order());
    return r;
}

MultiSeries newton_algebraic(const AlgebraicEquation& eq, TruncOrder order) {
    if (eq.coeffs.size() < 2) throw std::invalid_argument("algebraic equation needs degree >= 1");
    AlgebraicEquation deriv;
    for (std::size_t i = 1; i < eq.coeffs.size(); ++i)
        deriv.coeffs.push_back(rat(static_cast<long>(i)) * eq.coeffs[i]);

    MultiSeries c = eq.seed.truncated(order);
    if (algebraic_residual(deriv, c).constant_term() == 0)
        throw DegenerateSeed("dP/dC vanishes at the seed's constant term");
    // Each step at least doubles the valuation of the residual, so the
    // truncated root is reached long before the iteration cap.
    for (int step = 0; step < 64; ++step) {
        MultiSeries r = algebraic_residual(eq, c);
        if (r.is_zero()) return c;
        c = c - divide(r, algebraic_residual(deriv, c));
    }
    throw std::logic_error("newton_algebraic: no convergence (seed off every branch?)");
}

MultiSeries kernel_root_bargraph(TruncOrder order) {
    MultiSeries one = MultiSeries::one(order);
    MultiSeries x = var_x(order), y = var_y(order);
    AlgebraicEquation eq;
    eq.coeffs = {one, -(one + y - x + x * y), y};
    eq.seed = one;
    return newton_algebraic(eq, order);
}

MultiSeries kernel_solve_bargraph(TruncOrder order) {
    MultiSeries one = MultiSeries::one(order);
    MultiSeries y = var_y(order);
    MultiSeries s = kernel_root_bargraph(order);
    return y * (s - one) * reciprocal(one - y * s);
}

MultiSeries q_algebraic_bargraph_residual(const MultiSeries& b) {
    TruncOrder o = b.order();
    MultiSeries x = MultiSeries::var(o, VX), y = MultiSeries::var(o, VY),
                q = MultiSeries::var(o, VQ);
    MultiSeries bq = subst_x_times_q(b, 1);
    MultiSeries xyq = x * y * q;
    return b - (y * bq + xyq + x * q * b + xyq * bq + x * q * bq * b);
}

bool verify_q_algebraic_bargraph(TruncOrder order) {
    return q_algebraic_bargraph_residual(evaluate("bargraph_complete", order)).is_zero();
}

}  // namespace polyenum
