#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "annulus/degenerate.hpp"
#include "annulus/instance_io.hpp"
#include "annulus/report.hpp"
#include "annulus/strip_sweep.hpp"
#include "test_util.hpp"

using namespace annulus;
using testutil::pts;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t count = 0;
    for (size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("parse_instance accepts comments, blanks, and decimals") {
    std::istringstream in(
        "# golden instance\n"
        "8 10\n"
        "\n"
        "2 0   # corner\n"
        "4.5 6\n"
        "5 3\n");
    const ParsedInstance parsed = parse_instance(in);
    REQUIRE(parsed.points.size() == 4);
    CHECK(parsed.points[2].x == 4.5);
    CHECK(parsed.points[2].id == 2);
    CHECK(parsed.source_lines == std::vector<int>{2, 4, 5, 6});
}

TEST_CASE("parse_instance reports the offending line") {
    std::istringstream missing("1 2\n3\n");
    CHECK_THROWS_WITH_AS(parse_instance(missing),
                         "line 2: expected \"x y\", got \"3\"", ParseError);
    std::istringstream junk("1 2\nfoo bar\n");
    CHECK_THROWS_AS(parse_instance(junk), ParseError);
    std::istringstream trailing("1 2 3\n");
    CHECK_THROWS_AS(parse_instance(trailing), ParseError);
}

TEST_CASE("instance round trip") {
    const auto points = pts({{8, 10}, {2, 0}, {4.25, 6}, {5, 3}});
    std::istringstream in(format_instance(points, "round trip"));
    const ParsedInstance parsed = parse_instance(in);
    REQUIRE(parsed.points.size() == points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        CHECK(parsed.points[i].x == points[i].x);
        CHECK(parsed.points[i].y == points[i].y);
    }
}

TEST_CASE("generate_instance is deterministic and in general position") {
    const auto first = generate_instance(5, 7, 40);
    const auto second = generate_instance(5, 7, 40);
    CHECK(format_instance(first) == format_instance(second));
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 200);
        const auto points = generate_instance(n, rng(), 2LL * n);
        CHECK(validate_general_position(points).ok());
        for (const Point& p : points) {
            CHECK(p.x >= 0);
            CHECK(p.x <= 2 * n);
        }
    }
}

TEST_CASE("generate_instance rejects impossible ranges") {
    CHECK_THROWS_AS(generate_instance(10, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(generate_instance(0, 1, 5), std::invalid_argument);
}

TEST_CASE("perturb_points breaks ties and keeps orderings") {
    const auto tied = pts({{0, 0}, {0, 5}, {3, 5}, {7, 2}});
    const auto fixed = perturb_points(tied);
    CHECK(validate_general_position(fixed).ok());
    // original strict orderings survive
    CHECK(fixed[3].x > fixed[2].x);
    CHECK(fixed[2].x > fixed[1].x);
    CHECK(fixed[1].y > fixed[0].y);
    // tie broken toward the smaller id
    CHECK(fixed[0].x < fixed[1].x);
    CHECK(fixed[1].y < fixed[2].y);
}

TEST_CASE("perturb_points fails when no gap exists") {
    CHECK_THROWS_AS(perturb_points(pts({{1, 1}, {1, 1}, {1, 1}})),
                    std::invalid_argument);
}

TEST_CASE("json layout matches the documented schema") {
    const auto points = pts({{8, 10}, {2, 0}, {4, 6}, {5, 3}});
    const auto sol = solve_max_annulus_serial(points);
    const ResultRecord rec = make_record("sweep", sol, 1.5);
    const auto j = nlohmann::json::parse(to_json(rec));
    CHECK(j["algorithm"] == "sweep");
    CHECK(j["width"] == 2.0);
    CHECK(j["outer"]["xmin"] == 2.0);
    CHECK(j["outer"]["ymax"] == 10.0);
    CHECK(j["inner"]["xmax"] == 5.0);
    CHECK(j["center"].is_null());
    CHECK(j["strip"]["a"] == 0);
    CHECK(j["strip"]["b"] == 1);
    CHECK(j["elapsed_ms"] == 1.5);
    // documented key order
    const std::string dumped = to_json(rec);
    CHECK(dumped.find("\"algorithm\"") < dumped.find("\"width\""));
    CHECK(dumped.find("\"width\"") < dumped.find("\"outer\""));
    CHECK(dumped.find("\"outer\"") < dumped.find("\"inner\""));
    CHECK(dumped.find("\"inner\"") < dumped.find("\"center\""));
    CHECK(dumped.find("\"center\"") < dumped.find("\"strip\""));
    CHECK(dumped.find("\"strip\"") < dumped.find("\"elapsed_ms\""));
}

TEST_CASE("json for no solution and for degenerate solutions") {
    const ResultRecord none = make_record("sweep", std::optional<Solution>{}, 0.1);
    const auto jn = nlohmann::json::parse(to_json(none));
    CHECK(jn["width"].is_null());
    CHECK(jn["outer"].is_null());
    CHECK(jn["strip"].is_null());

    const auto points = pts({{0, 0}, {5, 0.5}, {10, 1}});
    const ResultRecord degen =
        make_record("degenerate", solve_point_inner(points), 0.2);
    const auto jd = nlohmann::json::parse(to_json(degen));
    CHECK(jd["width"] == 5.0);
    CHECK(jd["inner"].is_null());
    CHECK(jd["center"]["id"] == 0);
    CHECK(jd["center"]["x"] == 0.0);
    CHECK(jd["strip"].is_null());
}

TEST_CASE("text output is timing free and stable") {
    const auto points = pts({{8, 10}, {2, 0}, {4, 6}, {5, 3}});
    const ResultRecord a = make_record("sweep", solve_max_annulus_serial(points), 1.0);
    const ResultRecord b = make_record("sweep", solve_max_annulus_serial(points), 99.0);
    CHECK(to_text(a) == to_text(b));
    CHECK(to_text(a).find("width 2") != std::string::npos);
    const ResultRecord none = make_record("sweep", std::optional<Solution>{}, 0.0);
    CHECK(to_text(none).find("no annulus exists") != std::string::npos);
}

TEST_CASE("svg contains n point glyphs and two rectangles") {
    const auto points = pts({{8, 10}, {2, 0}, {4, 6}, {5, 3}});
    const ResultRecord rec = make_record("sweep", solve_max_annulus_serial(points), 0.0);
    std::ostringstream svg;
    render_svg(svg, points, rec);
    const std::string body = svg.str();
    CHECK(count_occurrences(body, "<circle") == points.size());
    CHECK(count_occurrences(body, "<rect") == 2);
    CHECK(count_occurrences(body, "<svg") == 1);
    CHECK(count_occurrences(body, "</svg>") == 1);
    CHECK(body.find("<?xml") == 0);
}

TEST_CASE("svg for degenerate solutions marks the center") {
    const auto points = pts({{0, 0}, {5, 0.5}, {10, 1}});
    const ResultRecord rec =
        make_record("degenerate", solve_point_inner(points), 0.0);
    std::ostringstream svg;
    render_svg(svg, points, rec);
    const std::string body = svg.str();
    CHECK(count_occurrences(body, "<circle") == points.size());
    CHECK(count_occurrences(body, "<rect") == 1);
    CHECK(count_occurrences(body, "<path") == 1);
}

TEST_CASE("records revalidate against their instances") {
    std::mt19937_64 rng(123123);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 9);
        const auto points = generate_instance(n, rng(), 4LL * n);
        const ResultRecord rec =
            make_record("sweep", solve_max_annulus(points), 0.0);
        CHECK(revalidate(rec, points));
        const ResultRecord degen =
            make_record("degenerate", solve_point_inner(points), 0.0);
        CHECK(revalidate(degen, points));
    }
    // a corrupted record must fail
    const auto points = pts({{8, 10}, {2, 0}, {4, 6}, {5, 3}});
    ResultRecord rec = make_record("sweep", solve_max_annulus_serial(points), 0.0);
    rec.inner->xmin = 3;  // no longer the recorded width or supports
    CHECK_FALSE(revalidate(rec, points));
}
