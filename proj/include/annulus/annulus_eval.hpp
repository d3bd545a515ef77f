#pragma once

#include <optional>
#include <span>

#include "annulus/geometry.hpp"

namespace annulus {

// Best empty annulus for a fixed outer rectangle: the inner rectangle is the
// bounding box of the points strictly inside `outer`, which maximises every
// gap simultaneously. Returns nullopt when fewer than two points are strictly
// inside (no inner rectangle of non-zero area exists). inner_support is set
// to the ids of the extreme interior points; outer_support is left unset.
std::optional<Annulus> inner_from_outer(const AxisRect& outer,
                                        std::span<const Point> points);

// Constant-time re-evaluation after one outer edge moved outward and exposed
// exactly one previously-boundary point. Expands the inner bounding box to
// include `absorbed` and recomputes widths. The moved edge's outer support is
// reset to -1 (the caller knows the new support). Equivalent to recomputing
// inner_from_outer(new_outer, points) as long as the precondition holds:
// new_outer differs from a.outer by exactly one edge moved outward, and
// `absorbed` is the only point that changed sides. Throws
// std::invalid_argument on a detectable precondition violation.
Annulus absorb_point(const Annulus& a, const AxisRect& new_outer,
                     const Point& absorbed);

}  // namespace annulus
