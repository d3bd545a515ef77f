#pragma once

#include <optional>
#include <span>
#include <vector>

#include "annulus/degenerate.hpp"
#include "annulus/strip_sweep.hpp"

namespace annulus {

// Exhaustive reference solvers, used as ground truth in differential tests.
// They share the basic geometry primitives with the fast solvers but never
// touch the sweep code paths. Deliberately slow and obvious.
//
// Completeness of the outer enumeration: any empty annulus whose eight edges
// pass through points can have each outer edge slid outward to the nearest
// supporting point coordinate; no gap decreases and no new point becomes
// strictly interior (new touches land on the boundary, which is allowed).
// The inner rectangle is then the bounding box of the interior points. So
// every candidate is an (outer-y-top, outer-y-bottom, outer-x-left,
// outer-x-right) tuple of input coordinates and the search space is O(n^4).

// Maximum-width empty annulus by trying every coordinate tuple; supported
// edges and strictly positive gaps required. Ties keep the lexicographically
// smallest (top, bottom, left, right) tuple. Intended for small n; O(n^5).
std::optional<Solution> brute_max_annulus(std::span<const Point> points);

// All empty annuli of the strip whose outer top/bottom edges pass through
// a/b: one per (left event in L, right event in R) pair with at least two
// interior points. Returned in the strip frame, left events outermost,
// scanning left-to-right then right events left-to-right.
std::vector<Annulus> brute_strip_enumeration(const Strip& strip);

// Point-inner reference: O(n^2) pairwise Chebyshev scan.
std::optional<PointInnerSolution> brute_point_inner(std::span<const Point> points);

}  // namespace annulus
