#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyenum/polynomial.hpp"
#include "polyenum/rational.hpp"

namespace polyenum {

// What a vertical cut through a strip polygon can look like: the rows of
// horizontal edges it meets (0 = strip floor, k = ceiling), together with
// the pairing that records how those edges are connected to the left of
// the cut. The pairing is non-crossing because the connections live in the
// plane left of the cut.
struct CutState {
    std::vector<int> rows;  // even count >= 2, increasing
    std::vector<int> arc;   // arc[i] = index into rows of the partner of rows[i]

    bool operator==(const CutState&) const = default;
    bool operator<(const CutState& o) const;
    std::string to_string() const;  // "{0-3,1-2}" style, arcs by lower row
};

// All cut states of a height-k strip: the nonempty non-crossing partial
// matchings of the k+1 rows, in lexicographic order. Rejects k outside
// 1..8 (the count grows like 3^k; see build_transfer for the solving cap).
std::vector<CutState> build_states(int k);

// Column-appending graph over the cut states. Weights are polynomials in
// x (variable slot A; one x per pair of horizontal edges in the appended
// column) and z (slot B; one z per vertical unit edge, z^2 = y). In the
// raw graph every weight is a single monomial; the reflection-merged graph
// (orbits of the top-bottom flip) may sum two.
struct TransferGraph {
    int k = 0;
    std::vector<CutState> states;
    std::vector<Poly2> start;              // weight of opening a polygon in a state
    std::vector<std::vector<Poly2>> step;  // step[from][to], zero polynomial = no arrow
    std::vector<Poly2> finish;             // weight of closing from a state (no x)
};

// Builds the graph from first principles: a transition appends one column,
// choosing vertical unit edges so that every lattice vertex in the column
// has degree 0 or 2 (horizontal stubs from both cuts included). Choices
// that close a cycle are rejected, except in the closing weights, which
// are admissible exactly when everything merges into a single cycle.
// Rejects k outside 1..6.
TransferGraph build_transfer(int k);

// Quotient of build_transfer(k) by the top-bottom reflection. Solving
// either graph yields the same series; this one is roughly half the size.
TransferGraph build_transfer_merged(int k);

// Half-perimeter generating function of the polygons the graph describes:
// eliminates the per-state series exactly over Q(x, z) and substitutes
// z^2 = y. Variable A of the result is x, variable B is y.
RatFun solve_transfer(const TransferGraph& g);

// Self-avoiding polygons spanning at most k rows, counted by half
// horizontal (x) and half vertical (y) perimeter. Counts (polygon,
// vertical position) pairs: a height-h polygon appears k-h+1 times.
RatFun solve_strip(int k);

// Denominator of solve_strip(k) at x = y = t, reduced against the
// numerator and scaled so its lowest-order coefficient is 1. Its smallest
// root in (0, 1] is the dominant pole t0 of the isotropic series.
PolyU strip_iso_denominator(int k);

// Encloses t0 to the requested interval width by Sturm counts + bisection.
std::pair<Rational, Rational> strip_pole_enclosure(int k, const Rational& width);

// Decimal string for t0^{-1/2} with `digits` places: a lower bound on the
// perimeter growth constant of unconfined self-avoiding polygons, since
// coefficients of the confined series grow like t0^{-n} and every confined
// polygon is a polygon.
std::string growth_lower_bound(int k, int digits);

}  // namespace polyenum
