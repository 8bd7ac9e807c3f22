#pragma once

#include <vector>

#include "polyenum/series.hpp"

namespace polyenum {

// A layer-at-a-time functional equation,
//
//     B(s) = A(s) + sum_i U_i(s) * u_i + D(s) * B(s q^j),
//
// where s tracks the height of the last column, the boundary unknowns u_i
// are B(1) (and, when U has two entries, dB/ds(1)), and the shifted argument
// encodes duplicating the last column. Contract, checked by the solver:
// every monomial of A and U_i contains s (attached columns are nonempty),
// and every monomial of D containing s also contains q. Together these make
// the iteration contractive at fixed truncation.
struct LayeredEquation {
    MultiSeries A;               // layer added to nothing
    std::vector<MultiSeries> U;  // coefficients of the boundary unknowns (1 or 2)
    MultiSeries D;               // coefficient of the shifted unknown B(s q^j)
    int shift = 1;               // j
};

struct LayeredSolution {
    MultiSeries full;                   // B(s), boundary unknowns resolved
    std::vector<MultiSeries> boundary;  // the u_i, s-free
};

// Iterates the shifted argument until it leaves the truncation order, then
// eliminates the boundary unknowns: one unknown needs the s=1 evaluation
// only, two need the s-derivative at 1 as well (a 2x2 linear system over
// series). Throws NonContractive when the contract above fails and
// SingularLinearSystem when the eliminating system is not invertible.
LayeredSolution solve_layered(const LayeredEquation& eq, TruncOrder order);

// The concrete equations shipped with the library. The bargraph, staircase
// and column-convex equations work in (x, y, q, s) directly; the Ferrers and
// stack ones track the width in s (substitute x -> xs in the one-variable
// recursion), so their boundary value at s = 1 is the complete series.
LayeredEquation layered_bargraph(TruncOrder order);
LayeredEquation layered_staircase(TruncOrder order);
LayeredEquation layered_column_convex(TruncOrder order);
LayeredEquation layered_ferrers(TruncOrder order);
LayeredEquation layered_stack(TruncOrder order);

// P(C) = sum_i coeffs[i] C^i with series coefficients, plus a seed whose
// constant term selects the branch.
struct AlgebraicEquation {
    std::vector<MultiSeries> coeffs;  // index = power of the unknown
    MultiSeries seed;
};

// The unique root of P extending the seed, by Newton iteration (quadratic
// convergence). Throws DegenerateSeed when dP/dC at the seed has zero
// constant term (e.g. seeding a double root).
MultiSeries newton_algebraic(const AlgebraicEquation& eq, TruncOrder order);

// P evaluated at a candidate root; zero iff the candidate solves P at the
// candidate's truncation.
MultiSeries algebraic_residual(const AlgebraicEquation& eq, const MultiSeries& c);

// The power-series root S(x,y) of  y S^2 - (1 + y - x + xy) S + 1 = 0  with
// S(0,0) = 1; substituting s = S annihilates the kernel of the width-tracked
// bargraph equation at q = 1.
MultiSeries kernel_root_bargraph(TruncOrder order);

// Bargraph half-perimeter g.f. recovered by the kernel method: cancel the
// kernel at s = S, solve for the boundary value, B = y(S-1)/(1-yS).
MultiSeries kernel_solve_bargraph(TruncOrder order);

// Residual of the area-perimeter bargraph identity
//     B = y B(xq) + xyq + xq B + xyq B(xq) + xq B(xq) B
// for a candidate complete series B(x,y,q); the identity holds for the
// catalog series, so the residual is zero to truncation.
MultiSeries q_algebraic_bargraph_residual(const MultiSeries& b);

// True iff the catalog's complete bargraph series satisfies the identity
// above at the given order. Verification only: this equation is not used to
// compute anything here.
bool verify_q_algebraic_bargraph(TruncOrder order);

}  // namespace polyenum
