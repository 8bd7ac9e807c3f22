#pragma once

#include <string>
#include <vector>

#include "polyenum/polynomial.hpp"
#include "polyenum/series.hpp"

namespace polyenum {

// The formula catalog: every class we can expand from an explicit generating
// function, keyed by a stable string id. Variable conventions: x marks the
// horizontal half-perimeter (or the width, for *_width_* and the directed
// statistics), y the vertical half-perimeter, q the area. Isotropic forms
// (ids ending in _iso) live in the x slot, read it as t.
//
//   bargraph_area                 bargraphs by area
//   bargraph_perimeter            bargraphs by half-perimeters (x,y)
//   bargraph_width_area           bargraphs by width and area
//   bargraph_complete             bargraphs by (x,y,q)
//   ferrers_perimeter             Ferrers diagrams by (x,y)
//   ferrers_perimeter_iso         Ferrers diagrams by total half-perimeter
//   ferrers_complete              Ferrers diagrams by (x,y,q)
//   stack_perimeter               stack polygons by (x,y)
//   stack_complete                stack polygons by (x,y,q)
//   staircase_perimeter           staircase polygons by (x,y)
//   staircase_complete            staircase polygons by (x,y,q)
//   cc_area                       column-convex polygons by area
//   cc_perimeter                  column-convex polygons by (x,y)
//   cc_complete                   column-convex polygons by (x,y,q)
//   dcc_area                      directed column-convex polygons by area
//   dcc_perimeter                 directed column-convex polygons by (x,y)
//   directed_area                 directed animals by area
//   directed_area_rsp             directed animals by right site-perimeter (x)
//                                 and area (q)
//   triangular_directed           triangular-lattice directed animals by
//                                 marked points (x) and area (q), raw radical
//                                 form; its expansion carries a spurious
//                                 constant 1/2
//   triangular_directed_corrected same radical with the constant removed; the
//                                 variant that actually matches enumeration
//   sap_strip2                    self-avoiding polygons spanning offsets in a
//                                 height-2 strip, by horizontal (x) and
//                                 vertical (y) half-perimeter
//   sap_strip3                    same in a height-3 strip
//   sap_strip3_iso                height-3 strip, isotropic

// All catalog ids, sorted.
std::vector<std::string> formula_ids();

// Expand the catalog formula to the requested truncation. Exact; infinite
// sums are cut off at the first index whose minimal (x,q)-degree leaves the
// order. Throws UnknownFormula for an id outside the catalog.
MultiSeries evaluate(const std::string& id, TruncOrder order);

// Column-convex polygons by area via the prefix automaton on column codes:
// five word classes, one linear equation each, solved exactly over Q(q).
// The directed variant removes the transitions that place a cell below the
// first-visited cell of its column. Returns the five state series (the
// first is the empty-prefix class, identically 1); the polygon g.f. is the
// sum of states 2 and 3. RatFun variable A is q, variable B is unused.
std::vector<RatFun> cc_automaton_states(bool directed);
RatFun cc_area_via_automaton();
RatFun dcc_area_via_automaton();

// Directed animals by area via heaps of dimers: the half-pyramid series H
// satisfies H = q(1 + H + H^2) (Newton-lifted), and pyramids then satisfy
// D = H(1 + D). Equals evaluate("directed_area", order).
MultiSeries heap_system_directed_area(TruncOrder order);

}  // namespace polyenum
