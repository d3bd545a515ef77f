#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annulus/geometry.hpp"

namespace annulus {

// Differential verification: random instances, fast solver vs brute-force
// oracle, exact width comparison. The first mismatch is minimized by greedy
// point deletion and reported; a mismatch is a finding about the algorithm,
// not a crash.

struct VerifyOptions {
    int n_min = 6;
    int n_max = 16;
    int trials = 500;
    std::uint64_t seed = 1;
    bool degenerate = false;  // point-inner solver vs pairwise oracle
    bool inject_fault = false;
    int threads = 0;
    std::string artifact_path;  // minimized counterexample file ("" = don't write)
};

struct VerifyMismatch {
    std::vector<Point> instance;  // minimized, ids renumbered 0..n-1
    std::string solver_width;     // formatted width or "none"
    std::string oracle_width;
    int trial = -1;
};

struct VerifyReport {
    int trials_run = 0;
    std::optional<VerifyMismatch> mismatch;

    bool ok() const { return !mismatch.has_value(); }
};

VerifyReport run_verify(const VerifyOptions& opt);
std::string format_verify_report(const VerifyOptions& opt, const VerifyReport& rep);

// Scaling benchmark: median wall time per instance size for the serial and
// OpenMP solvers, plus the log-log slope between consecutive sizes.

struct BenchOptions {
    std::vector<int> sizes;
    int trials = 5;
    std::uint64_t seed = 42;
    int threads = 0;
    bool degenerate = false;  // bench the point-inner solver instead
};

struct BenchRow {
    int n = 0;
    double serial_ms = 0.0;
    double parallel_ms = 0.0;
    double slope_serial = 0.0;    // vs previous row; 0 for the first
    double slope_parallel = 0.0;
};

std::vector<BenchRow> run_bench(const BenchOptions& opt);
std::string format_bench_table(const BenchOptions& opt,
                               const std::vector<BenchRow>& rows);

}  // namespace annulus
