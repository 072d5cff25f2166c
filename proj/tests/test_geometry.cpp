#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diskspan/generators.hpp"
#include "diskspan/geometry.hpp"
#include "diskspan/grid.hpp"
#include "diskspan/rng.hpp"
#include "oracle_helpers.hpp"

using namespace diskspan;

namespace {
Disk disk(double x, double y, double r, int id = -1) { return {{x, y}, r, id}; }
}  // namespace

TEST_CASE("disks_intersect basics") {
    CHECK(disks_intersect(disk(0, 0, 1), disk(1, 0, 1)));
    CHECK_FALSE(disks_intersect(disk(0, 0, 1), disk(3, 0, 1)));
    // Containment counts as intersection.
    CHECK(disks_intersect(disk(0, 0, 3), disk(0.5, 0, 1)));
}

TEST_CASE("contains on a closed disk") {
    const Disk d = disk(0, 0, 1);
    CHECK(contains(d, {0, 0}));
    CHECK_FALSE(contains(d, {2, 0}));
    CHECK(contains(d, {1, 0}));  // boundary included
}

TEST_CASE("circle_intersection_points of crossing unit circles") {
    // x^2 + y^2 = 1 and (x-1)^2 + y^2 = 1 give x = 1/2, y = +-sqrt(3)/2.
    const auto pts = circle_intersection_points(disk(0, 0, 1), disk(1, 0, 1));
    REQUIRE(pts.size() == 2);
    const double root3_half = 0.8660254037844386;
    CHECK(pts[0].x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pts[1].x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(pts[0].y) == doctest::Approx(root3_half).epsilon(1e-12));
    CHECK(std::abs(pts[1].y) == doctest::Approx(root3_half).epsilon(1e-12));
    CHECK(pts[0].y * pts[1].y < 0);  // one above, one below
}

TEST_CASE("circle_intersection_points degenerate inputs") {
    CHECK(circle_intersection_points(disk(0, 0, 1), disk(3, 0, 1)).empty());
    CHECK(circle_intersection_points(disk(0, 0, 3), disk(0.5, 0, 1)).empty());
    // Externally tangent circles cross nowhere (strict inequality); the
    // validator is responsible for flagging them.
    CHECK(circle_intersection_points(disk(0, 0, 1), disk(2, 0, 1)).empty());
    CHECK_THROWS_AS(circle_intersection_points(disk(0, 0, 1), disk(0, 0, 1)),
                    std::invalid_argument);
}

TEST_CASE("intersection points lie on both circles and in both disks") {
    Rng rng(42);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto disks = oracle::random_disks(2, rng, 0.2, 0.5);
        if (!circles_cross(disks[0], disks[1])) continue;
        for (const Point& p : circle_intersection_points(disks[0], disks[1])) {
            for (const Disk& d : disks) {
                CHECK(std::abs(dist(p, d.center) - d.radius) < 1e-9);
                // Containment within tolerance: the point sits on the
                // boundary, so the closed-disk test may be off by 1 ulp.
                CHECK(dist(p, d.center) <= d.radius + 1e-9);
            }
        }
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("intersect iff crossing points or nested centers") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto d = oracle::random_disks(2, rng);
        const bool pts = !circle_intersection_points(d[0], d[1]).empty();
        const bool nested = contains(d[0], d[1].center) || contains(d[1], d[0].center);
        CHECK(disks_intersect(d[0], d[1]) == (pts || nested));
        CHECK(disks_intersect(d[0], d[1]) == disks_intersect(d[1], d[0]));
    }
}

TEST_CASE("depth_at") {
    std::vector<Disk> stack;
    for (int i = 0; i < 5; ++i) stack.push_back(disk(0, 0, 1.0 + 0.1 * i, i));
    CHECK(depth_at({5, 5}, stack) == 0);
    CHECK(depth_at({0, 0}, stack) == 5);
}

TEST_CASE("depth partition property and grid agreement") {
    Rng rng(11);
    auto disks = oracle::random_disks(40, rng);
    const DiskGrid grid(disks);
    for (int trial = 0; trial < 200; ++trial) {
        const Point p{rng.uniform_double(-0.2, 1.2), rng.uniform_double(-0.2, 1.2)};
        const std::size_t full = depth_at(p, disks);
        CHECK(static_cast<int>(full) == oracle::depth_loop(p, disks));
        CHECK(grid.depth_at(p) == full);
        // Split into B and D-B at a random cut.
        const std::size_t cut = rng.uniform(disks.size() + 1);
        std::vector<Disk> lo(disks.begin(), disks.begin() + cut);
        std::vector<Disk> hi(disks.begin() + cut, disks.end());
        CHECK(depth_at(p, lo) + depth_at(p, hi) == full);
        // Bounded depth agrees when it commits to an answer.
        const auto bounded = grid.bounded_depth(p, 3);
        if (full <= 3) {
            REQUIRE(bounded.has_value());
            CHECK(*bounded == full);
        } else {
            CHECK_FALSE(bounded.has_value());
        }
    }
}

TEST_CASE("covering_set matches contains") {
    Rng rng(13);
    auto disks = oracle::random_disks(30, rng);
    const DiskGrid grid(disks);
    for (int trial = 0; trial < 100; ++trial) {
        const Point p{rng.uniform_double(), rng.uniform_double()};
        const auto ids = covering_set(p, disks);
        CHECK(ids == grid.covering_set(p));
        CHECK(ids.size() == depth_at(p, disks));
        for (int id : ids) CHECK(contains(disks[id], p));
    }
}

TEST_CASE("validate_general_position flags degenerate fixtures") {
    {
        auto inst = make_instance({disk(0, 0, 1), disk(0, 0, 1)});
        const auto report = validate_general_position(inst);
        REQUIRE_FALSE(report.ok);
        CHECK(report.violations.front().kind ==
              GeneralPositionViolation::Kind::duplicate);
    }
    {
        auto inst = make_instance({disk(0, 0, 1), disk(2, 0, 1)});
        const auto report = validate_general_position(inst);
        REQUIRE_FALSE(report.ok);
        CHECK(report.violations.front().kind ==
              GeneralPositionViolation::Kind::tangent);
    }
    {
        // Three unit circles through the origin.
        auto inst = make_instance(
            {disk(1, 0, 1), disk(0, 1, 1), disk(-1, 0, 1)});
        const auto report = validate_general_position(inst);
        REQUIRE_FALSE(report.ok);
        bool concurrent = false;
        for (const auto& v : report.violations)
            concurrent |= v.kind == GeneralPositionViolation::Kind::concurrent_triple;
        CHECK(concurrent);
    }
}

TEST_CASE("perturbing generator reaches general position") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const DiskInstance inst = generate_instance("uniform_unit", 100, seed);
        CHECK(validate_general_position(inst).ok);
        CHECK(inst.size() == 100);
        for (std::size_t i = 0; i < inst.size(); ++i)
            CHECK(inst.disks[i].id == static_cast<int>(i));
    }
    CHECK(validate_general_position(generate_instance("stacked", 60, 9)).ok);
    CHECK(validate_general_position(generate_instance("corridor", 40, 9)).ok);
    CHECK(validate_general_position(generate_instance("clustered", 80, 9)).ok);
}

TEST_CASE("make_instance rejects bad disks") {
    CHECK_THROWS_AS(make_instance({disk(0, 0, -1)}), std::invalid_argument);
    CHECK_THROWS_AS(make_instance({disk(0, 0, 0)}), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(make_instance({disk(nan, 0, 1)}), std::invalid_argument);
}

TEST_CASE("generator determinism") {
    const DiskInstance a = generate_instance("uniform_unit", 50, 123);
    const DiskInstance b = generate_instance("uniform_unit", 50, 123);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.disks[i].center.x == b.disks[i].center.x);
        CHECK(a.disks[i].center.y == b.disks[i].center.y);
        CHECK(a.disks[i].radius == b.disks[i].radius);
    }
}
