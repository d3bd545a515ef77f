#include "annulus/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "annulus/degenerate.hpp"
#include "annulus/instance_io.hpp"
#include "annulus/oracle.hpp"
#include "annulus/strip_sweep.hpp"

namespace annulus {

namespace {

struct FaultGuard {
    explicit FaultGuard(bool enable) { testhooks::g_fault_stop_on_lr_tie = enable; }
    ~FaultGuard() { testhooks::g_fault_stop_on_lr_tie = false; }
};

std::string width_or_none(const std::optional<double>& w) {
    return w ? format_coord(*w) : "none";
}

std::optional<double> sweep_width(std::span<const Point> pts, int threads) {
    const auto sol = solve_max_annulus(pts, threads);
    if (!sol) return std::nullopt;
    return sol->width;
}

std::optional<double> brute_width(std::span<const Point> pts) {
    const auto sol = brute_max_annulus(pts);
    if (!sol) return std::nullopt;
    return sol->width;
}

std::vector<Point> renumbered(std::vector<Point> pts) {
    for (size_t i = 0; i < pts.size(); ++i) pts[i].id = static_cast<int>(i);
    return pts;
}

// Greedy deletion: drop any point whose removal keeps the solver and oracle
// disagreeing, restarting the scan after each successful deletion.
std::vector<Point> minimize_counterexample(
    std::vector<Point> pts,
    const std::function<bool(std::span<const Point>)>& mismatching) {
    bool changed = true;
    while (changed && pts.size() > 2) {
        changed = false;
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<Point> cand = pts;
            cand.erase(cand.begin() + static_cast<long>(i));
            cand = renumbered(std::move(cand));
            if (mismatching(cand)) {
                pts = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    return pts;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
    const FaultGuard fault(opt.inject_fault);
    std::mt19937_64 master(opt.seed);

    auto mismatching = [&](std::span<const Point> pts) {
        if (opt.degenerate) {
            const auto fast = solve_point_inner(pts);
            const auto ref = brute_point_inner(pts);
            if (fast.has_value() != ref.has_value()) return true;
            return fast && fast->width != ref->width;
        }
        const auto fast = sweep_width(pts, opt.threads);
        const auto ref = brute_width(pts);
        return fast != ref;
    };

    VerifyReport report;
    for (int trial = 0; trial < opt.trials; ++trial) {
        const int span = opt.n_max - opt.n_min + 1;
        const int n = opt.n_min + static_cast<int>(master() % span);
        // Small coordinate ranges keep tie cases frequent.
        const long long coord_max = n * (1LL << (master() % 3));
        const std::uint64_t instance_seed = master();
        std::vector<Point> pts = generate_instance(n, instance_seed, coord_max);
        ++report.trials_run;
        if (!mismatching(pts)) continue;

        pts = minimize_counterexample(std::move(pts), mismatching);
        VerifyMismatch mm;
        mm.trial = trial;
        mm.instance = pts;
        if (opt.degenerate) {
            const auto fast = solve_point_inner(pts);
            const auto ref = brute_point_inner(pts);
            mm.solver_width =
                width_or_none(fast ? std::optional<double>(fast->width) : std::nullopt);
            mm.oracle_width =
                width_or_none(ref ? std::optional<double>(ref->width) : std::nullopt);
        } else {
            mm.solver_width = width_or_none(sweep_width(pts, opt.threads));
            mm.oracle_width = width_or_none(brute_width(pts));
        }
        if (!opt.artifact_path.empty()) {
            save_instance(opt.artifact_path, pts,
                          "counterexample trial " + std::to_string(trial) +
                              ": solver=" + mm.solver_width +
                              " oracle=" + mm.oracle_width);
        }
        report.mismatch = std::move(mm);
        break;
    }
    return report;
}

std::string format_verify_report(const VerifyOptions& opt,
                                 const VerifyReport& rep) {
    const std::string label = opt.degenerate ? "degenerate" : "solve";
    if (rep.ok()) {
        return label + ": " + std::to_string(rep.trials_run) + "/" +
               std::to_string(rep.trials_run) + " agree\n";
    }
    const VerifyMismatch& mm = *rep.mismatch;
    std::string out = label + ": MISMATCH at trial " + std::to_string(mm.trial) +
                      " (solver=" + mm.solver_width + ", oracle=" + mm.oracle_width +
                      ")\n";
    out += "minimized counterexample (" + std::to_string(mm.instance.size()) +
           " points):\n";
    out += format_instance(mm.instance);
    return out;
}

namespace {

double median_ms(std::vector<double> times) {
    std::sort(times.begin(), times.end());
    return times[(times.size() - 1) / 2];
}

template <typename F>
double time_ms(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
    std::vector<BenchRow> rows;
    std::mt19937_64 master(opt.seed);
    for (size_t si = 0; si < opt.sizes.size(); ++si) {
        const int n = opt.sizes[si];
        std::vector<double> serial_times, parallel_times;
        for (int t = 0; t < opt.trials; ++t) {
            const std::vector<Point> pts =
                generate_instance(n, master(), 8LL * n);
            if (opt.degenerate) {
                serial_times.push_back(time_ms([&] {
                    const auto sol = solve_point_inner(pts);
                    volatile double sink = sol ? sol->width : 0.0;
                    (void)sink;
                }));
            } else {
                serial_times.push_back(
                    time_ms([&] { solve_max_annulus_serial(pts); }));
                parallel_times.push_back(
                    time_ms([&] { solve_max_annulus(pts, opt.threads); }));
            }
        }
        BenchRow row;
        row.n = n;
        row.serial_ms = median_ms(serial_times);
        row.parallel_ms = opt.degenerate ? 0.0 : median_ms(parallel_times);
        if (si > 0) {
            const BenchRow& prev = rows.back();
            const double dn = std::log(static_cast<double>(n) / prev.n);
            if (prev.serial_ms > 0 && row.serial_ms > 0) {
                row.slope_serial = std::log(row.serial_ms / prev.serial_ms) / dn;
            }
            if (prev.parallel_ms > 0 && row.parallel_ms > 0) {
                row.slope_parallel = std::log(row.parallel_ms / prev.parallel_ms) / dn;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string format_bench_table(const BenchOptions& opt,
                               const std::vector<BenchRow>& rows) {
    auto num = [](double v, int width) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%*.3f", width, v);
        return std::string(buf);
    };
    std::string out;
    if (opt.degenerate) {
        out += "       n    median_ms   slope\n";
        for (const BenchRow& r : rows) {
            char head[32];
            std::snprintf(head, sizeof(head), "%8d", r.n);
            out += head;
            out += num(r.serial_ms, 13);
            out += r.slope_serial != 0.0 ? num(r.slope_serial, 8) : "       -";
            out += "\n";
        }
        return out;
    }
    out += "       n    serial_ms  parallel_ms  speedup  slope_serial  slope_parallel\n";
    for (const BenchRow& r : rows) {
        char head[32];
        std::snprintf(head, sizeof(head), "%8d", r.n);
        out += head;
        out += num(r.serial_ms, 13);
        out += num(r.parallel_ms, 13);
        out += r.parallel_ms > 0 ? num(r.serial_ms / r.parallel_ms, 9) : "        -";
        out += r.slope_serial != 0.0 ? num(r.slope_serial, 14) : "             -";
        out += r.slope_parallel != 0.0 ? num(r.slope_parallel, 16) : "               -";
        out += "\n";
    }
    return out;
}

}  // namespace annulus
