#include "annulus/annulus_eval.hpp"

#include <stdexcept>

namespace annulus {

std::optional<Annulus> inner_from_outer(const AxisRect& outer,
                                        std::span<const Point> points) {
    if (!outer.valid()) return std::nullopt;
    int count = 0;
    AxisRect box;
    std::array<int, 4> support{-1, -1, -1, -1};
    for (const Point& p : points) {
        if (!strictly_inside(p, outer)) continue;
        if (count == 0) {
            box = {p.x, p.y, p.x, p.y};
            support = {p.id, p.id, p.id, p.id};
        } else {
            if (p.x < box.xmin) { box.xmin = p.x; support[kEdgeLeft] = p.id; }
            if (p.x > box.xmax) { box.xmax = p.x; support[kEdgeRight] = p.id; }
            if (p.y < box.ymin) { box.ymin = p.y; support[kEdgeBottom] = p.id; }
            if (p.y > box.ymax) { box.ymax = p.y; support[kEdgeTop] = p.id; }
        }
        ++count;
    }
    if (count < 2) return std::nullopt;
    Annulus a;
    a.outer = outer;
    a.inner = box;
    a.widths = annulus_widths(outer, box);
    a.inner_support = support;
    return a;
}

Annulus absorb_point(const Annulus& a, const AxisRect& new_outer,
                     const Point& absorbed) {
    int moved = -1;
    int moved_count = 0;
    if (new_outer.ymax != a.outer.ymax) { moved = kEdgeTop; ++moved_count; }
    if (new_outer.xmax != a.outer.xmax) { moved = kEdgeRight; ++moved_count; }
    if (new_outer.ymin != a.outer.ymin) { moved = kEdgeBottom; ++moved_count; }
    if (new_outer.xmin != a.outer.xmin) { moved = kEdgeLeft; ++moved_count; }
    if (moved_count != 1) {
        throw std::invalid_argument("absorb_point: exactly one edge must move");
    }
    const bool outward = (moved == kEdgeTop && new_outer.ymax > a.outer.ymax) ||
                         (moved == kEdgeRight && new_outer.xmax > a.outer.xmax) ||
                         (moved == kEdgeBottom && new_outer.ymin < a.outer.ymin) ||
                         (moved == kEdgeLeft && new_outer.xmin < a.outer.xmin);
    if (!outward) {
        throw std::invalid_argument("absorb_point: edge moved inward");
    }
    const bool was_on_old_edge =
        (moved == kEdgeTop && absorbed.y == a.outer.ymax) ||
        (moved == kEdgeRight && absorbed.x == a.outer.xmax) ||
        (moved == kEdgeBottom && absorbed.y == a.outer.ymin) ||
        (moved == kEdgeLeft && absorbed.x == a.outer.xmin);
    if (!was_on_old_edge || !strictly_inside(absorbed, new_outer)) {
        throw std::invalid_argument(
            "absorb_point: absorbed point not freshly interior on the moved edge");
    }

    Annulus out = a;
    out.outer = new_outer;
    out.outer_support[moved] = -1;
    if (absorbed.x < out.inner.xmin) {
        out.inner.xmin = absorbed.x;
        out.inner_support[kEdgeLeft] = absorbed.id;
    }
    if (absorbed.x > out.inner.xmax) {
        out.inner.xmax = absorbed.x;
        out.inner_support[kEdgeRight] = absorbed.id;
    }
    if (absorbed.y < out.inner.ymin) {
        out.inner.ymin = absorbed.y;
        out.inner_support[kEdgeBottom] = absorbed.id;
    }
    if (absorbed.y > out.inner.ymax) {
        out.inner.ymax = absorbed.y;
        out.inner_support[kEdgeTop] = absorbed.id;
    }
    out.widths = annulus_widths(out.outer, out.inner);
    return out;
}

}  // namespace annulus
