#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "annulus/degenerate.hpp"
#include "annulus/strip_sweep.hpp"

namespace annulus {

// One solver result in reportable form. Re-checkable: revalidate() feeds the
// record back through the emptiness predicate against its instance.
struct ResultRecord {
    std::string algorithm;  // "sweep" | "brute" | "degenerate"
    bool has_solution = false;
    double width = 0.0;
    AxisRect outer;
    std::optional<AxisRect> inner;
    std::optional<Point> center;  // degenerate solutions only
    std::array<int, 4> inner_support{-1, -1, -1, -1};
    std::array<int, 4> outer_support{-1, -1, -1, -1};
    int strip_a = -1;
    int strip_b = -1;
    std::string origin;
    double elapsed_ms = 0.0;
};

ResultRecord make_record(const std::string& algorithm,
                         const std::optional<Solution>& sol, double elapsed_ms);
ResultRecord make_record(const std::string& algorithm,
                         const std::optional<PointInnerSolution>& sol,
                         double elapsed_ms);

// Human-readable block; deliberately timing-free so output is reproducible.
std::string to_text(const ResultRecord& rec);

// Single JSON object with the documented layout:
// {"algorithm","width","outer":{"xmin","ymin","xmax","ymax"},
//  "inner":{...}|null,"center":{"id","x","y"}|null,
//  "strip":{"a","b"}|null,"elapsed_ms"}
// width and outer are null when no solution exists.
std::string to_json(const ResultRecord& rec);

// SVG 1.1 figure: every input point as a circle glyph, plus the outer and
// inner rectangles (degenerate solutions draw one rectangle and a cross
// marking the center).
void render_svg(std::ostream& out, std::span<const Point> points,
                const ResultRecord& rec);

// The record still describes a valid result for this instance: the annulus
// (rebuilt from the record) is empty and its width matches, or the
// degenerate square strictly contains no point besides its center.
bool revalidate(const ResultRecord& rec, std::span<const Point> points);

}  // namespace annulus
