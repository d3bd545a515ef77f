#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace annulus {

// An input site. `id` is the point's index in the input sequence and is
// stable across sorting, mirroring and perturbation.
struct Point {
    int id = -1;
    double x = 0.0;
    double y = 0.0;
};

// Closed axis-parallel rectangle. Valid rectangles have non-zero area.
struct AxisRect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    bool valid() const { return xmin < xmax && ymin < ymax; }
    bool contains_rect(const AxisRect& r) const {
        return r.xmin >= xmin && r.xmax <= xmax && r.ymin >= ymin && r.ymax <= ymax;
    }

    bool operator==(const AxisRect&) const = default;
};

// true iff p is in the open interior of r; boundary counts as NOT inside.
bool strictly_inside(const Point& p, const AxisRect& r);

// true iff p is in r or on its boundary.
bool inside_or_on(const Point& p, const AxisRect& r);

// The four side gaps between an inner and an outer rectangle, and their
// minimum. width == min(top, bottom, left, right) always.
struct WidthProfile {
    double top = 0.0;
    double bottom = 0.0;
    double left = 0.0;
    double right = 0.0;
    double width = 0.0;

    bool operator==(const WidthProfile&) const = default;
};

// Gap widths for inner contained in outer. Throws std::invalid_argument if
// either rectangle is invalid or inner is not contained in outer.
WidthProfile annulus_widths(const AxisRect& outer, const AxisRect& inner);

// Index order for the per-edge support arrays.
enum EdgeIndex { kEdgeTop = 0, kEdgeRight = 1, kEdgeBottom = 2, kEdgeLeft = 3 };

// Annulus between two nested axis-parallel rectangles. Support entries are
// point ids (-1 when unknown); a set entry must lie on the closed segment of
// the edge it supports.
struct Annulus {
    AxisRect outer;
    AxisRect inner;
    WidthProfile widths;
    std::array<int, 4> inner_support{-1, -1, -1, -1};  // top, right, bottom, left
    std::array<int, 4> outer_support{-1, -1, -1, -1};
};

// Emptiness: every point strictly inside the outer rectangle must lie in or
// on the inner rectangle. Points on either boundary are permitted.
bool is_empty_annulus(const Annulus& a, std::span<const Point> points);

// Checks the structural invariants of an annulus against its point set:
// containment, the width identities, and that every set support id lies on
// the closed segment of its edge. Used by tests and result re-validation.
bool annulus_well_formed(const Annulus& a, std::span<const Point> points);

struct CoordinateClash {
    char axis;  // 'x' or 'y'
    int id_a;
    int id_b;
    double value;
};

struct GeneralPositionReport {
    std::vector<CoordinateClash> clashes;

    bool ok() const { return clashes.empty(); }
    std::string describe() const;
};

// General position: within one input set all x values are pairwise distinct
// and all y values are pairwise distinct. Coordinates must be finite.
// Duplicate points clash on both axes and are therefore rejected too.
GeneralPositionReport validate_general_position(std::span<const Point> points);

}  // namespace annulus
