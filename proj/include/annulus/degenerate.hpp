#pragma once

#include <optional>
#include <span>
#include <vector>

#include "annulus/geometry.hpp"

namespace annulus {

// Widest empty annulus whose inner rectangle collapses to a single input
// point. The outer rectangle is the axis-parallel square centered at the
// point with half-side equal to its Chebyshev nearest-neighbor distance; a
// closer point would lie strictly inside the square, so no larger width is
// attainable and the square attains this one.
struct PointInnerSolution {
    int center_id = -1;
    double width = 0.0;
    AxisRect outer;
};

// Per-point minimum Chebyshev (L-infinity) distance to any other point,
// indexed like `points`. kd-tree based, O(n log n) expected; exact
// arithmetic (coordinate differences only). Requires n >= 2.
std::vector<double> chebyshev_all_nearest_neighbors(std::span<const Point> points);

// argmax over points of the Chebyshev nearest-neighbor distance; ties keep
// the smallest id. Returns nullopt when n < 2.
std::optional<PointInnerSolution> solve_point_inner(std::span<const Point> points);

}  // namespace annulus
