#include "annulus/strip_sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "annulus/annulus_eval.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace annulus {

namespace testhooks {
bool g_fault_stop_on_lr_tie = false;
}  // namespace testhooks

Strip build_strip(std::span<const Point> points_by_x, const Point& a,
                  const Point& b) {
    if (!(a.y > b.y)) {
        throw std::invalid_argument("build_strip: requires y(a) > y(b)");
    }
    Strip s;
    s.mirrored = a.x < b.x;
    s.pts.reserve(points_by_x.size());
    auto push = [&](Point p) {
        if (p.y < b.y || p.y > a.y) return;
        if (s.mirrored) p.x = -p.x;
        if (p.id == a.id) s.a_pos = static_cast<int>(s.pts.size());
        if (p.id == b.id) s.b_pos = static_cast<int>(s.pts.size());
        s.pts.push_back(p);
    };
    if (s.mirrored) {
        for (auto it = points_by_x.rbegin(); it != points_by_x.rend(); ++it) push(*it);
    } else {
        for (const Point& p : points_by_x) push(p);
    }
    if (s.a_pos < 0 || s.b_pos < 0 || s.b_pos >= s.a_pos) {
        throw std::invalid_argument("build_strip: a and b not ordered in the strip");
    }
    return s;
}

const char* to_string(ConfigLabel label) {
    switch (label) {
        case ConfigLabel::kCaseI: return "I";
        case ConfigLabel::kCaseIIA1: return "II A1";
        case ConfigLabel::kCaseIIA2: return "II A2";
        case ConfigLabel::kCaseIIA3: return "II A3";
        case ConfigLabel::kCaseIIIA1: return "III A1";
        case ConfigLabel::kCaseIIIA2: return "III A2";
    }
    return "?";
}

std::vector<InitialConfig> initial_configurations(const Strip& strip) {
    std::vector<InitialConfig> out;
    const double ymin = strip.b().y;
    const double ymax = strip.a().y;
    auto emit = [&](double xmin, double xmax, ConfigLabel label, int right_id,
                    int left_id) {
        const AxisRect outer{xmin, ymin, xmax, ymax};
        auto annulus = inner_from_outer(outer, strip.pts);
        if (!annulus) return;  // required interior points missing
        annulus->outer_support = {strip.a().id, right_id, strip.b().id, left_id};
        out.push_back({*annulus, label});
    };

    const int m = strip.mid_count();
    if (m >= 2) {
        emit(strip.b().x, strip.a().x, ConfigLabel::kCaseI, strip.a().id,
             strip.b().id);
    } else if (m == 0) {
        if (const Point* q1 = strip.q1()) {
            emit(q1->x, strip.a().x, ConfigLabel::kCaseIIA1, strip.a().id, q1->id);
        }
        if (const Point* p1 = strip.p1()) {
            emit(strip.b().x, p1->x, ConfigLabel::kCaseIIA2, p1->id, strip.b().id);
        }
        if (strip.q_prime() && strip.p_prime()) {
            emit(strip.q_prime()->x, strip.p_prime()->x, ConfigLabel::kCaseIIA3,
                 strip.p_prime()->id, strip.q_prime()->id);
        }
    } else {
        if (const Point* qp = strip.q_prime()) {
            emit(qp->x, strip.a().x, ConfigLabel::kCaseIIIA1, strip.a().id, qp->id);
        }
        if (const Point* pp = strip.p_prime()) {
            emit(strip.b().x, pp->x, ConfigLabel::kCaseIIIA2, pp->id, strip.b().id);
        }
    }
    return out;
}

SweepOutcome sweep_one(const Annulus& config, const Strip& strip,
                       std::vector<Annulus>* visited) {
    int li = -1;
    int ri = -1;
    for (int i = 0; i <= strip.b_pos; ++i) {
        if (strip.pts[i].x == config.outer.xmin) { li = i; break; }
    }
    for (int i = strip.a_pos; i < strip.size(); ++i) {
        if (strip.pts[i].x == config.outer.xmax) { ri = i; break; }
    }
    if (li < 0 || ri < 0) {
        throw std::invalid_argument("sweep_one: config edges not on strip event points");
    }

    Annulus cur = config;
    SweepOutcome out{cur, cur.widths.width, 0};
    if (visited) visited->push_back(cur);

    const int max_shifts = strip.size();
    while (true) {
        const WidthProfile& w = cur.widths;
        // Ties between the vertical and horizontal gaps resolve toward
        // top/bottom, which stops the sweep.
        if (w.width == w.top || w.width == w.bottom) break;
        if (testhooks::g_fault_stop_on_lr_tie && w.left == w.width &&
            w.right == w.width) {
            break;
        }
        if (w.left == w.width) {  // left/right tie shifts left
            if (li == 0) break;   // Left_out reached l
            const Point vacated = strip.pts[li];
            --li;
            AxisRect next = cur.outer;
            next.xmin = strip.pts[li].x;
            if (vacated.id == strip.b().id) {
                // b stays on the bottom edge; the interior is unchanged.
                cur.outer = next;
                cur.widths = annulus_widths(next, cur.inner);
            } else {
                cur = absorb_point(cur, next, vacated);
            }
            cur.outer_support[kEdgeLeft] = strip.pts[li].id;
        } else {
            if (ri == strip.size() - 1) break;  // Right_out reached r
            const Point vacated = strip.pts[ri];
            ++ri;
            AxisRect next = cur.outer;
            next.xmax = strip.pts[ri].x;
            if (vacated.id == strip.a().id) {
                cur.outer = next;
                cur.widths = annulus_widths(next, cur.inner);
            } else {
                cur = absorb_point(cur, next, vacated);
            }
            cur.outer_support[kEdgeRight] = strip.pts[ri].id;
        }
        ++out.iterations;
        if (visited) visited->push_back(cur);
        if (cur.widths.width > out.width) {
            out.best = cur;
            out.width = cur.widths.width;
        }
        if (out.iterations > max_shifts) {
            throw std::logic_error("sweep_one: more shifts than event points");
        }
    }
    return out;
}

namespace {

Annulus unmirror(const Annulus& a) {
    Annulus m = a;
    m.outer = {-a.outer.xmax, a.outer.ymin, -a.outer.xmin, a.outer.ymax};
    m.inner = {-a.inner.xmax, a.inner.ymin, -a.inner.xmin, a.inner.ymax};
    std::swap(m.widths.left, m.widths.right);
    std::swap(m.inner_support[kEdgeLeft], m.inner_support[kEdgeRight]);
    std::swap(m.outer_support[kEdgeLeft], m.outer_support[kEdgeRight]);
    return m;
}

// width descending, then smallest (a_id, b_id): a strict total order on
// candidates, so reductions are schedule-independent.
bool better_than(const Solution& lhs, const Solution& rhs) {
    if (lhs.width != rhs.width) return lhs.width > rhs.width;
    if (lhs.a_id != rhs.a_id) return lhs.a_id < rhs.a_id;
    return lhs.b_id < rhs.b_id;
}

void merge_best(std::optional<Solution>& best, std::optional<Solution>&& sol) {
    if (!sol) return;
    if (!best || better_than(*sol, *best)) best = std::move(sol);
}

std::vector<Point> sorted_by_x(std::span<const Point> points) {
    std::vector<Point> by_x(points.begin(), points.end());
    std::sort(by_x.begin(), by_x.end(),
              [](const Point& l, const Point& r) { return l.x < r.x; });
    return by_x;
}

void require_general_position(std::span<const Point> points) {
    const GeneralPositionReport report = validate_general_position(points);
    if (!report.ok()) {
        throw std::invalid_argument("general position violated: " + report.describe());
    }
}

}  // namespace

std::optional<Solution> sweep_strip(const Strip& strip) {
    const std::vector<InitialConfig> configs = initial_configurations(strip);
    if (configs.empty()) return std::nullopt;

    const Annulus* best = nullptr;
    double best_width = 0.0;
    ConfigLabel best_label = configs.front().label;
    std::vector<Annulus> winners;
    winners.reserve(configs.size());
    for (const InitialConfig& cfg : configs) {
        SweepOutcome outcome = sweep_one(cfg.annulus, strip);
        winners.push_back(outcome.best);
        if (best == nullptr || outcome.width > best_width) {
            best = &winners.back();
            best_width = outcome.width;
            best_label = cfg.label;
        }
    }

    Solution sol;
    sol.annulus = strip.mirrored ? unmirror(*best) : *best;
    sol.width = best_width;
    sol.a_id = strip.a().id;
    sol.b_id = strip.b().id;
    sol.origin = "strip(" + std::to_string(sol.a_id) + "," +
                 std::to_string(sol.b_id) + ") case " + to_string(best_label);
    if (strip.mirrored) sol.origin += " (mirrored)";
    return sol;
}

std::optional<Solution> solve_max_annulus_serial(std::span<const Point> points) {
    require_general_position(points);
    const std::vector<Point> by_x = sorted_by_x(points);
    std::optional<Solution> best;
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !(points[i].y > points[j].y)) continue;
            const Strip strip = build_strip(by_x, points[i], points[j]);
            merge_best(best, sweep_strip(strip));
        }
    }
    return best;
}

std::optional<Solution> solve_max_annulus(std::span<const Point> points,
                                          int threads) {
#ifdef _OPENMP
    require_general_position(points);
    const std::vector<Point> by_x = sorted_by_x(points);
    std::optional<Solution> best;
    const int n = static_cast<int>(points.size());
    const long long pairs = static_cast<long long>(n) * n;
    const int num_threads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(num_threads)
    {
        std::optional<Solution> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long k = 0; k < pairs; ++k) {
            const int i = static_cast<int>(k / n);
            const int j = static_cast<int>(k % n);
            if (i == j || !(points[i].y > points[j].y)) continue;
            const Strip strip = build_strip(by_x, points[i], points[j]);
            merge_best(local, sweep_strip(strip));
        }
#pragma omp critical(annulus_solve_reduce)
        merge_best(best, std::move(local));
    }
    return best;
#else
    (void)threads;
    return solve_max_annulus_serial(points);
#endif
}

}  // namespace annulus
