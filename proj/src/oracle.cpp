#include "annulus/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "annulus/annulus_eval.hpp"

namespace annulus {

namespace {

struct CoordOwner {
    double value;
    int id;
};

std::vector<CoordOwner> sorted_axis(std::span<const Point> points, bool x_axis) {
    std::vector<CoordOwner> axis;
    axis.reserve(points.size());
    for (const Point& p : points) {
        axis.push_back({x_axis ? p.x : p.y, p.id});
    }
    std::sort(axis.begin(), axis.end(),
              [](const CoordOwner& l, const CoordOwner& r) { return l.value < r.value; });
    return axis;
}

const Point& by_id(std::span<const Point> points, int id) {
    for (const Point& p : points) {
        if (p.id == id) return p;
    }
    return points.front();  // unreachable for well-formed input
}

}  // namespace

std::optional<Solution> brute_max_annulus(std::span<const Point> points) {
    const std::vector<CoordOwner> xs = sorted_axis(points, true);
    const std::vector<CoordOwner> ys = sorted_axis(points, false);
    const int n = static_cast<int>(points.size());

    std::optional<Solution> best;
    for (int ti = 0; ti < n; ++ti) {
        for (int bi = 0; bi < ti; ++bi) {
            for (int li = 0; li < n; ++li) {
                for (int ri = li + 1; ri < n; ++ri) {
                    const AxisRect outer{xs[li].value, ys[bi].value,
                                         xs[ri].value, ys[ti].value};
                    auto annulus = inner_from_outer(outer, points);
                    if (!annulus) continue;
                    // Each outer edge must pass through a point. General
                    // position makes the coordinate owner the only candidate.
                    const Point& top = by_id(points, ys[ti].id);
                    const Point& bottom = by_id(points, ys[bi].id);
                    const Point& left = by_id(points, xs[li].id);
                    const Point& right = by_id(points, xs[ri].id);
                    if (top.x < outer.xmin || top.x > outer.xmax) continue;
                    if (bottom.x < outer.xmin || bottom.x > outer.xmax) continue;
                    if (left.y < outer.ymin || left.y > outer.ymax) continue;
                    if (right.y < outer.ymin || right.y > outer.ymax) continue;
                    const WidthProfile& w = annulus->widths;
                    if (w.top <= 0 || w.bottom <= 0 || w.left <= 0 || w.right <= 0) {
                        continue;
                    }
                    if (best && w.width <= best->width) continue;
                    annulus->outer_support = {top.id, right.id, bottom.id, left.id};
                    Solution sol;
                    sol.annulus = *annulus;
                    sol.width = w.width;
                    sol.origin = "brute";
                    best = std::move(sol);
                }
            }
        }
    }
    return best;
}

std::vector<Annulus> brute_strip_enumeration(const Strip& strip) {
    std::vector<Annulus> all;
    const double ymin = strip.b().y;
    const double ymax = strip.a().y;
    for (int li = 0; li <= strip.b_pos; ++li) {
        for (int ri = strip.a_pos; ri < strip.size(); ++ri) {
            const AxisRect outer{strip.pts[li].x, ymin, strip.pts[ri].x, ymax};
            auto annulus = inner_from_outer(outer, strip.pts);
            if (!annulus) continue;
            annulus->outer_support = {strip.a().id, strip.pts[ri].id,
                                      strip.b().id, strip.pts[li].id};
            all.push_back(*annulus);
        }
    }
    return all;
}

std::optional<PointInnerSolution> brute_point_inner(std::span<const Point> points) {
    const int n = static_cast<int>(points.size());
    if (n < 2) return std::nullopt;
    int best = -1;
    double best_width = -1.0;
    for (int i = 0; i < n; ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            nearest = std::min(nearest,
                               std::max(std::fabs(points[i].x - points[j].x),
                                        std::fabs(points[i].y - points[j].y)));
        }
        if (nearest > best_width ||
            (nearest == best_width && points[i].id < points[best].id)) {
            best = i;
            best_width = nearest;
        }
    }
    const Point& c = points[best];
    PointInnerSolution sol;
    sol.center_id = c.id;
    sol.width = best_width;
    sol.outer = {c.x - best_width, c.y - best_width, c.x + best_width,
                 c.y + best_width};
    return sol;
}

}  // namespace annulus
