#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "annulus/degenerate.hpp"
#include "annulus/harness.hpp"
#include "annulus/instance_io.hpp"
#include "annulus/oracle.hpp"
#include "annulus/report.hpp"
#include "annulus/strip_sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

struct Failure {
    int code;
    std::string message;
};

std::string clashes_with_lines(const annulus::GeneralPositionReport& report,
                               const std::vector<int>& source_lines) {
    std::string msg = "input is not in general position: ";
    bool first = true;
    for (const annulus::CoordinateClash& c : report.clashes) {
        if (!first) msg += "; ";
        first = false;
        msg += "points on lines " + std::to_string(source_lines[c.id_a]) +
               " and " + std::to_string(source_lines[c.id_b]) + " share " + c.axis +
               " = " + annulus::format_coord(c.value);
    }
    return msg;
}

std::vector<annulus::Point> load_points(const std::string& path, bool perturb) {
    annulus::ParsedInstance parsed;
    try {
        parsed = annulus::load_instance(path);
    } catch (const annulus::ParseError& e) {
        throw Failure{kExitUsage, path + ": " + e.what()};
    } catch (const std::exception& e) {
        throw Failure{kExitUsage, e.what()};
    }
    if (perturb) {
        try {
            parsed.points = annulus::perturb_points(parsed.points);
        } catch (const std::exception& e) {
            throw Failure{kExitValidation, e.what()};
        }
    }
    const auto report = annulus::validate_general_position(parsed.points);
    if (!report.ok()) {
        throw Failure{kExitValidation,
                      clashes_with_lines(report, parsed.source_lines)};
    }
    return parsed.points;
}

void emit(const annulus::ResultRecord& rec,
          const std::vector<annulus::Point>& points, bool json,
          const std::string& svg_path) {
    if (json) {
        std::cout << annulus::to_json(rec) << "\n";
    } else {
        std::cout << annulus::to_text(rec);
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) {
            throw Failure{kExitUsage, "cannot write " + svg_path};
        }
        annulus::render_svg(svg, points, rec);
    }
}

template <typename SolveFn>
int run_solver(const std::string& algorithm, const std::string& input,
               bool perturb, bool json, const std::string& svg_path,
               SolveFn&& solve) {
    const std::vector<annulus::Point> points = load_points(input, perturb);
    const auto start = std::chrono::steady_clock::now();
    const auto solution = solve(points);
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed =
        std::chrono::duration<double, std::milli>(stop - start).count();
    const auto rec = annulus::make_record(algorithm, solution, elapsed);
    emit(rec, points, json, svg_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-width axis-parallel empty rectangular annulus"};
    app.require_subcommand(1);

    std::string input, svg_path, out_path, artifact_path;
    bool json = false, perturb = false;
    int parallel = 0;

    auto add_io = [&](CLI::App* cmd, bool with_parallel) {
        cmd->add_option("input", input, "instance file (\"x y\" per line)")
            ->required();
        cmd->add_flag("--json", json, "emit the result as a JSON object");
        cmd->add_option("--svg", svg_path, "also write an SVG figure");
        cmd->add_flag("--perturb", perturb,
                      "break general-position ties by rank jitter");
        if (with_parallel) {
            cmd->add_option("--parallel", parallel,
                            "worker threads for strip processing (0 = auto)");
        }
    };

    CLI::App* solve = app.add_subcommand("solve", "strip-sweep solver");
    add_io(solve, true);

    CLI::App* brute = app.add_subcommand("brute", "exhaustive reference solver");
    int brute_cap = 64;
    add_io(brute, false);
    brute->add_option("--max-n", brute_cap,
                      "refuse instances larger than this (the oracle is O(n^5))");

    CLI::App* degen = app.add_subcommand(
        "degenerate", "widest annulus whose inner rectangle is a single point");
    add_io(degen, false);

    CLI::App* gen = app.add_subcommand("gen", "random instance generator");
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    long long gen_coord_max = -1;
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--coord-max", gen_coord_max,
                    "coordinates drawn from [0, M]; default 8n");
    gen->add_option("--out", out_path, "output file")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "differential test against the oracle");
    std::string n_range = "6..16";
    int trials = 500;
    std::uint64_t verify_seed = 1;
    bool verify_degenerate = false, inject_fault = false;
    verify->add_option("--n-range", n_range, "instance sizes, e.g. 6..16");
    verify->add_option("--trials", trials, "number of random instances");
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_flag("--degenerate", verify_degenerate,
                     "check the point-inner solver instead");
    verify->add_flag("--inject-fault", inject_fault,
                     "deliberately break a sweep tie rule (harness self-test)");
    verify->add_option("--artifact", artifact_path,
                       "write a minimized counterexample here on mismatch");
    verify->add_option("--parallel", parallel, "worker threads (0 = auto)");

    CLI::App* bench = app.add_subcommand("bench", "scaling benchmark");
    std::vector<int> sizes{64, 128, 256, 512};
    int bench_trials = 5;
    std::uint64_t bench_seed = 42;
    bool bench_degenerate = false;
    bench->add_option("--sizes", sizes, "instance sizes, ascending")
        ->delimiter(',');
    bench->add_option("--trials", bench_trials, "instances per size (median)");
    bench->add_option("--seed", bench_seed, "RNG seed");
    bench->add_flag("--degenerate", bench_degenerate,
                    "bench the point-inner solver instead");
    bench->add_option("--parallel", parallel, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) {
            return run_solver("sweep", input, perturb, json, svg_path,
                              [&](std::span<const annulus::Point> pts) {
                                  return annulus::solve_max_annulus(pts, parallel);
                              });
        }
        if (brute->parsed()) {
            return run_solver(
                "brute", input, perturb, json, svg_path,
                [&](std::span<const annulus::Point> pts)
                    -> std::optional<annulus::Solution> {
                    if (static_cast<int>(pts.size()) > brute_cap) {
                        throw Failure{kExitValidation,
                                      "brute solver capped at n <= " +
                                          std::to_string(brute_cap) +
                                          " (got " + std::to_string(pts.size()) +
                                          "); raise with --max-n"};
                    }
                    return annulus::brute_max_annulus(pts);
                });
        }
        if (degen->parsed()) {
            return run_solver("degenerate", input, perturb, json, svg_path,
                              [&](std::span<const annulus::Point> pts) {
                                  return annulus::solve_point_inner(pts);
                              });
        }
        if (gen->parsed()) {
            if (gen_coord_max < 0) gen_coord_max = 8LL * gen_n;
            std::vector<annulus::Point> pts;
            try {
                pts = annulus::generate_instance(gen_n, gen_seed, gen_coord_max);
            } catch (const std::invalid_argument& e) {
                throw Failure{kExitUsage, e.what()};
            }
            annulus::save_instance(
                out_path, pts,
                "generated: n=" + std::to_string(gen_n) +
                    " seed=" + std::to_string(gen_seed) +
                    " coord-max=" + std::to_string(gen_coord_max));
            return kExitOk;
        }
        if (verify->parsed()) {
            annulus::VerifyOptions opt;
            const auto sep = n_range.find("..");
            if (sep == std::string::npos) {
                throw Failure{kExitUsage, "--n-range must look like A..B"};
            }
            try {
                opt.n_min = std::stoi(n_range.substr(0, sep));
                opt.n_max = std::stoi(n_range.substr(sep + 2));
            } catch (const std::exception&) {
                throw Failure{kExitUsage, "--n-range must look like A..B"};
            }
            if (opt.n_min < 1 || opt.n_max < opt.n_min) {
                throw Failure{kExitUsage, "--n-range must satisfy 1 <= A <= B"};
            }
            opt.trials = trials;
            opt.seed = verify_seed;
            opt.degenerate = verify_degenerate;
            opt.inject_fault = inject_fault;
            opt.threads = parallel;
            opt.artifact_path = artifact_path;
            const auto report = annulus::run_verify(opt);
            std::cout << annulus::format_verify_report(opt, report);
            return report.ok() ? kExitOk : kExitMismatch;
        }
        if (bench->parsed()) {
            annulus::BenchOptions opt;
            opt.sizes = sizes;
            opt.trials = bench_trials;
            opt.seed = bench_seed;
            opt.threads = parallel;
            opt.degenerate = bench_degenerate;
            for (size_t i = 1; i < sizes.size(); ++i) {
                if (sizes[i] <= sizes[i - 1]) {
                    throw Failure{kExitUsage, "--sizes must be ascending"};
                }
            }
            std::cout << annulus::format_bench_table(opt, annulus::run_bench(opt));
            return kExitOk;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
