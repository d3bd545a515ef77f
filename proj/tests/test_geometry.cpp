#include <doctest.h>

#include <random>
#include <stdexcept>

#include "annulus/annulus_eval.hpp"
#include "annulus/geometry.hpp"
#include "annulus/instance_io.hpp"
#include "test_util.hpp"

using namespace annulus;
using testutil::pts;
using testutil::rect;

TEST_CASE("validate_general_position accepts distinct coordinates") {
    CHECK(validate_general_position(pts({{0, 0}, {1, 2}})).ok());
    CHECK(validate_general_position(std::vector<Point>{}).ok());
    CHECK(validate_general_position(pts({{3, 4}})).ok());
}

TEST_CASE("validate_general_position reports shared x") {
    const auto report = validate_general_position(pts({{0, 0}, {0, 5}}));
    REQUIRE_FALSE(report.ok());
    REQUIRE(report.clashes.size() == 1);
    CHECK(report.clashes[0].axis == 'x');
    CHECK(report.clashes[0].id_a == 0);
    CHECK(report.clashes[0].id_b == 1);
    CHECK(report.describe() == "points 0 and 1 share x = 0");
}

TEST_CASE("validate_general_position reports shared y") {
    const auto report = validate_general_position(pts({{3, 1}, {4, 1}}));
    REQUIRE_FALSE(report.ok());
    REQUIRE(report.clashes.size() == 1);
    CHECK(report.clashes[0].axis == 'y');
}

TEST_CASE("validate_general_position rejects duplicates on both axes") {
    const auto report = validate_general_position(pts({{2, 2}, {2, 2}}));
    CHECK(report.clashes.size() == 2);
}

TEST_CASE("strictly_inside boundary semantics") {
    const AxisRect r = rect(0, 0, 10, 10);
    CHECK(strictly_inside({0, 5, 5}, r));
    CHECK_FALSE(strictly_inside({0, 0, 5}, r));
    CHECK_FALSE(strictly_inside({0, 11, 5}, r));
    CHECK_FALSE(strictly_inside({0, 10, 10}, r));
    CHECK(inside_or_on({0, 0, 5}, r));
    CHECK_FALSE(inside_or_on({0, -0.5, 5}, r));
}

TEST_CASE("strictly_inside is false everywhere on the boundary") {
    const AxisRect r = rect(-3, 2, 7, 9);
    for (double t = 0.0; t <= 1.0; t += 0.125) {
        const double x = r.xmin + t * (r.xmax - r.xmin);
        const double y = r.ymin + t * (r.ymax - r.ymin);
        CHECK_FALSE(strictly_inside({0, x, r.ymin}, r));
        CHECK_FALSE(strictly_inside({0, x, r.ymax}, r));
        CHECK_FALSE(strictly_inside({0, r.xmin, y}, r));
        CHECK_FALSE(strictly_inside({0, r.xmax, y}, r));
    }
}

TEST_CASE("annulus_widths gap arithmetic") {
    const WidthProfile w1 = annulus_widths(rect(0, 0, 10, 10), rect(4, 4, 6, 6));
    CHECK(w1 == WidthProfile{4, 4, 4, 4, 4});
    const WidthProfile w2 = annulus_widths(rect(0, 0, 10, 10), rect(4, 4, 6, 7));
    CHECK(w2 == WidthProfile{3, 4, 4, 4, 3});
    const WidthProfile w3 = annulus_widths(rect(2, 0, 8, 10), rect(4, 3, 5, 6));
    CHECK(w3 == WidthProfile{4, 3, 2, 3, 2});
}

TEST_CASE("annulus_widths rejects non-containment") {
    CHECK_THROWS_AS(annulus_widths(rect(0, 0, 10, 10), rect(4, 4, 11, 6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(annulus_widths(rect(0, 0, 10, 10), rect(6, 4, 5, 6)),
                    std::invalid_argument);
}

namespace {

Annulus plain_annulus(const AxisRect& outer, const AxisRect& inner) {
    Annulus a;
    a.outer = outer;
    a.inner = inner;
    a.widths = annulus_widths(outer, inner);
    return a;
}

}  // namespace

TEST_CASE("is_empty_annulus boundary and region semantics") {
    const Annulus a = plain_annulus(rect(0, 0, 10, 10), rect(4, 4, 6, 7));
    CHECK(is_empty_annulus(a, pts({{4, 4}, {6, 7}, {12, 3}})));
    CHECK_FALSE(is_empty_annulus(a, pts({{4, 4}, {6, 7}, {12, 3}, {2, 2}})));
    CHECK(is_empty_annulus(a, pts({{4, 4}, {6, 7}, {12, 3}, {0, 5}})));
}

TEST_CASE("is_empty_annulus equals the interior-bounding-box check") {
    std::mt19937_64 seeds(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto points = generate_instance(10, seeds(), 30);
        const Annulus a = plain_annulus(rect(2, 2, 25, 27), rect(8, 9, 19, 21));
        bool bbox_inside = true;
        for (const Point& p : points) {
            if (strictly_inside(p, a.outer) && !inside_or_on(p, a.inner)) {
                bbox_inside = false;
            }
        }
        CHECK(is_empty_annulus(a, points) == bbox_inside);
    }
}

TEST_CASE("annulus_well_formed checks supports") {
    const auto points = pts({{4, 4}, {6, 7}});
    Annulus a = plain_annulus(rect(0, 0, 10, 10), rect(4, 4, 6, 7));
    a.inner_support = {1, 1, 0, 0};  // top right bottom left
    CHECK(annulus_well_formed(a, points));
    a.inner_support = {0, 1, 0, 0};  // (4,4) is not on the inner top edge
    CHECK_FALSE(annulus_well_formed(a, points));
    a.inner_support = {1, 1, 0, 0};
    a.widths.width += 1;
    CHECK_FALSE(annulus_well_formed(a, points));
}
