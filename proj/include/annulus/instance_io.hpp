#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "annulus/geometry.hpp"

namespace annulus {

// Instance file format: one point per line as "x y" (decimal or integer),
// '#' starts a comment, blank lines are ignored. Point ids are assigned in
// file order starting at 0.

struct ParseError : std::runtime_error {
    ParseError(int line_arg, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line_arg) + ": " + what_arg),
          line(line_arg) {}
    int line;
};

struct ParsedInstance {
    std::vector<Point> points;
    std::vector<int> source_lines;  // 1-based file line per point id
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance load_instance(const std::string& path);  // throws ParseError / runtime_error

std::string format_instance(std::span<const Point> points,
                            const std::string& header_comment = "");
void save_instance(const std::string& path, std::span<const Point> points,
                   const std::string& header_comment = "");

// n points with integer coordinates: n distinct x values and n distinct y
// values drawn from [0, coord_max] and paired by a random permutation, so
// general position holds by construction. Deterministic for a fixed seed.
// Throws std::invalid_argument when coord_max < n or n < 1.
std::vector<Point> generate_instance(int n, std::uint64_t seed,
                                     long long coord_max);

// Breaks general-position ties by rank jitter: on each axis, points get
// value + rank * eps with eps = (minimum nonzero coordinate gap over both
// axes) / (4n) and ranks ordered by (value, id). Existing strict orderings
// are preserved; equal values become distinct. Throws std::invalid_argument
// when every coordinate pair is identical (no nonzero gap exists).
std::vector<Point> perturb_points(std::span<const Point> points);

// Shortest round-trip decimal form; integers print without a fraction.
std::string format_coord(double v);

}  // namespace annulus
