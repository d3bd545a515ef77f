#include "annulus/degenerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace annulus {

namespace {

double chebyshev(const Point& a, const Point& b) {
    return std::max(std::fabs(a.x - b.x), std::fabs(a.y - b.y));
}

// Static kd-tree over point indices; node k splits its range at the median
// of the current axis, alternating x/y by depth.
class KdTree {
  public:
    explicit KdTree(std::span<const Point> points) : points_(points) {
        order_.resize(points.size());
        std::iota(order_.begin(), order_.end(), 0);
        build(0, static_cast<int>(order_.size()), 0);
    }

    // Nearest Chebyshev distance to any point other than points_[self].
    double nearest_excluding(int self) const {
        double best = std::numeric_limits<double>::infinity();
        search(0, static_cast<int>(order_.size()), 0, self, best);
        return best;
    }

  private:
    void build(int lo, int hi, int axis) {
        if (hi - lo <= 1) return;
        const int mid = (lo + hi) / 2;
        std::nth_element(order_.begin() + lo, order_.begin() + mid,
                         order_.begin() + hi, [&](int i, int j) {
                             return coord(i, axis) < coord(j, axis);
                         });
        build(lo, mid, 1 - axis);
        build(mid + 1, hi, 1 - axis);
    }

    void search(int lo, int hi, int axis, int self, double& best) const {
        if (hi <= lo) return;
        const int mid = (lo + hi) / 2;
        const int idx = order_[mid];
        if (idx != self) {
            best = std::min(best, chebyshev(points_[idx], points_[self]));
        }
        if (hi - lo == 1) return;
        const double delta = coord(self, axis) - coord(idx, axis);
        const int near_lo = delta < 0 ? lo : mid + 1;
        const int near_hi = delta < 0 ? mid : hi;
        const int far_lo = delta < 0 ? mid + 1 : lo;
        const int far_hi = delta < 0 ? hi : mid;
        search(near_lo, near_hi, 1 - axis, self, best);
        // The far side is at least |delta| away on this axis, which lower
        // bounds the Chebyshev distance.
        if (std::fabs(delta) < best) {
            search(far_lo, far_hi, 1 - axis, self, best);
        }
    }

    double coord(int i, int axis) const {
        return axis == 0 ? points_[i].x : points_[i].y;
    }

    std::span<const Point> points_;
    std::vector<int> order_;
};

}  // namespace

std::vector<double> chebyshev_all_nearest_neighbors(std::span<const Point> points) {
    const int n = static_cast<int>(points.size());
    if (n < 2) {
        throw std::invalid_argument("chebyshev_all_nearest_neighbors: need n >= 2");
    }
    const KdTree tree(points);
    std::vector<double> dist(points.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        dist[i] = tree.nearest_excluding(i);
    }
    return dist;
}

std::optional<PointInnerSolution> solve_point_inner(std::span<const Point> points) {
    if (points.size() < 2) return std::nullopt;
    const std::vector<double> dist = chebyshev_all_nearest_neighbors(points);

    int best = 0;
    for (size_t i = 1; i < points.size(); ++i) {
        if (dist[i] > dist[best] ||
            (dist[i] == dist[best] && points[i].id < points[best].id)) {
            best = static_cast<int>(i);
        }
    }
    const Point& c = points[best];
    PointInnerSolution sol;
    sol.center_id = c.id;
    sol.width = dist[best];
    sol.outer = {c.x - sol.width, c.y - sol.width, c.x + sol.width, c.y + sol.width};
    return sol;
}

}  // namespace annulus
