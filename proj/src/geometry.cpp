#include "annulus/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace annulus {

bool strictly_inside(const Point& p, const AxisRect& r) {
    return r.xmin < p.x && p.x < r.xmax && r.ymin < p.y && p.y < r.ymax;
}

bool inside_or_on(const Point& p, const AxisRect& r) {
    return r.xmin <= p.x && p.x <= r.xmax && r.ymin <= p.y && p.y <= r.ymax;
}

WidthProfile annulus_widths(const AxisRect& outer, const AxisRect& inner) {
    if (!outer.valid() || !inner.valid()) {
        throw std::invalid_argument("annulus_widths: degenerate rectangle");
    }
    if (!outer.contains_rect(inner)) {
        throw std::invalid_argument("annulus_widths: inner rectangle not contained in outer");
    }
    WidthProfile w;
    w.top = outer.ymax - inner.ymax;
    w.bottom = inner.ymin - outer.ymin;
    w.left = inner.xmin - outer.xmin;
    w.right = outer.xmax - inner.xmax;
    w.width = std::min(std::min(w.top, w.bottom), std::min(w.left, w.right));
    return w;
}

bool is_empty_annulus(const Annulus& a, std::span<const Point> points) {
    for (const Point& p : points) {
        if (strictly_inside(p, a.outer) && !inside_or_on(p, a.inner)) {
            return false;
        }
    }
    return true;
}

namespace {

const Point* find_point(std::span<const Point> points, int id) {
    for (const Point& p : points) {
        if (p.id == id) return &p;
    }
    return nullptr;
}

bool on_edge(const Point& p, const AxisRect& r, int edge) {
    switch (edge) {
        case kEdgeTop:
            return p.y == r.ymax && r.xmin <= p.x && p.x <= r.xmax;
        case kEdgeBottom:
            return p.y == r.ymin && r.xmin <= p.x && p.x <= r.xmax;
        case kEdgeLeft:
            return p.x == r.xmin && r.ymin <= p.y && p.y <= r.ymax;
        case kEdgeRight:
            return p.x == r.xmax && r.ymin <= p.y && p.y <= r.ymax;
        default:
            return false;
    }
}

}  // namespace

bool annulus_well_formed(const Annulus& a, std::span<const Point> points) {
    if (!a.outer.valid() || !a.inner.valid()) return false;
    if (!a.outer.contains_rect(a.inner)) return false;
    const WidthProfile w = annulus_widths(a.outer, a.inner);
    if (w != a.widths) return false;
    for (int edge = 0; edge < 4; ++edge) {
        if (a.inner_support[edge] >= 0) {
            const Point* p = find_point(points, a.inner_support[edge]);
            if (p == nullptr || !on_edge(*p, a.inner, edge)) return false;
        }
        if (a.outer_support[edge] >= 0) {
            const Point* p = find_point(points, a.outer_support[edge]);
            if (p == nullptr || !on_edge(*p, a.outer, edge)) return false;
        }
    }
    return true;
}

namespace {

std::string format_value(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void collect_clashes(std::span<const Point> points, char axis,
                     std::vector<CoordinateClash>& out) {
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    auto coord = [&](int i) { return axis == 'x' ? points[i].x : points[i].y; };
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (coord(i) != coord(j)) return coord(i) < coord(j);
        return points[i].id < points[j].id;
    });
    for (size_t k = 1; k < order.size(); ++k) {
        if (coord(order[k - 1]) == coord(order[k])) {
            out.push_back({axis, points[order[k - 1]].id, points[order[k]].id,
                           coord(order[k])});
        }
    }
}

}  // namespace

GeneralPositionReport validate_general_position(std::span<const Point> points) {
    GeneralPositionReport report;
    for (const Point& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            report.clashes.push_back({'x', p.id, p.id, p.x});
            return report;
        }
    }
    collect_clashes(points, 'x', report.clashes);
    collect_clashes(points, 'y', report.clashes);
    return report;
}

std::string GeneralPositionReport::describe() const {
    if (clashes.empty()) return "ok";
    std::string msg;
    for (const CoordinateClash& c : clashes) {
        if (!msg.empty()) msg += "; ";
        if (c.id_a == c.id_b) {
            msg += "point " + std::to_string(c.id_a) + " has a non-finite coordinate";
            continue;
        }
        msg += "points ";
        msg += std::to_string(c.id_a) + " and " + std::to_string(c.id_b);
        msg += " share ";
        msg += c.axis;
        msg += " = " + format_value(c.value);
    }
    return msg;
}

}  // namespace annulus
