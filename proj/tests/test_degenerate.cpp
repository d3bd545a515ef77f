#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "annulus/degenerate.hpp"
#include "annulus/instance_io.hpp"
#include "annulus/oracle.hpp"
#include "test_util.hpp"

using namespace annulus;
using testutil::pts;

TEST_CASE("chebyshev_all_nearest_neighbors small cases") {
    const auto two = chebyshev_all_nearest_neighbors(pts({{0, 0}, {3, 1}}));
    CHECK(two == std::vector<double>{3, 3});
    const auto three =
        chebyshev_all_nearest_neighbors(pts({{0, 0}, {1, 4}, {5, 5}}));
    CHECK(three == std::vector<double>{4, 4, 4});
}

TEST_CASE("chebyshev_all_nearest_neighbors matches the pairwise scan") {
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 50 + static_cast<int>(rng() % 400);
        const auto points = generate_instance(n, rng(), 6LL * n);
        const auto fast = chebyshev_all_nearest_neighbors(points);
        for (int i = 0; i < n; ++i) {
            double nearest = -1;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double d = std::max(std::fabs(points[i].x - points[j].x),
                                          std::fabs(points[i].y - points[j].y));
                if (nearest < 0 || d < nearest) nearest = d;
            }
            REQUIRE(fast[i] == nearest);
        }
    }
}

TEST_CASE("solve_point_inner golden instance") {
    const auto points = pts({{0, 0}, {5, 0.5}, {10, 1}});
    const auto sol = solve_point_inner(points);
    REQUIRE(sol.has_value());
    CHECK(sol->width == 5);
    CHECK(sol->center_id == 0);  // tie broken toward the smallest id
    CHECK(sol->outer == testutil::rect(-5, -5, 5, 5));
}

TEST_CASE("solve_point_inner with two points") {
    const auto sol = solve_point_inner(pts({{2, 1}, {6, 9}}));
    REQUIRE(sol.has_value());
    CHECK(sol->width == 8);
    CHECK(sol->center_id == 0);
}

TEST_CASE("solve_point_inner needs two points") {
    CHECK_FALSE(solve_point_inner(std::vector<Point>{}).has_value());
    CHECK_FALSE(solve_point_inner(pts({{1, 1}})).has_value());
}

TEST_CASE("solve_point_inner square is empty apart from its center") {
    std::mt19937_64 rng(2002);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 64);
        const auto points = generate_instance(n, rng(), 4LL * n);
        const auto sol = solve_point_inner(points);
        REQUIRE(sol.has_value());
        CHECK(sol->width > 0);
        for (const Point& p : points) {
            if (p.id == sol->center_id) continue;
            CHECK_FALSE(strictly_inside(p, sol->outer));
        }
    }
}

TEST_CASE("solve_point_inner matches the pairwise oracle") {
    std::mt19937_64 rng(3003);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 511);
        const auto points = generate_instance(n, rng(), 8LL * n);
        const auto fast = solve_point_inner(points);
        const auto ref = brute_point_inner(points);
        REQUIRE(fast.has_value());
        REQUIRE(ref.has_value());
        CHECK(fast->width == ref->width);
        CHECK(fast->center_id == ref->center_id);
    }
}

TEST_CASE("solve_point_inner scale equivariance") {
    std::mt19937_64 rng(4004);
    for (const double scale : {2.0, 0.5, 8.0}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto points = generate_instance(40, rng(), 200);
            std::vector<Point> scaled = points;
            for (Point& p : scaled) {
                p.x *= scale;
                p.y *= scale;
            }
            const auto base = solve_point_inner(points);
            const auto big = solve_point_inner(scaled);
            REQUIRE(base.has_value());
            REQUIRE(big.has_value());
            CHECK(big->width == base->width * scale);
            CHECK(big->center_id == base->center_id);
        }
    }
}
