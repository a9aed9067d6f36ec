#include "doctest.h"
#include "mmst/errors.hpp"
#include "mmst/oracle.hpp"
#include "mmst/recognition.hpp"
#include "mmst/ymmst.hpp"
#include "support.hpp"

using namespace mmst;

namespace {
const Axis kStdY = Axis::from_direction(0, 1);
const OrthoSystem kStdSys = OrthoSystem::from_degrees(90.0);

GeometricGraph rising_falling_path() {
    return GeometricGraph(
        RootedPointSet::from_decimals({{"0", "0"}, {"1", "1"}, {"2", "0.5"}}, 0),
        {{0, 1}, {1, 2}});
}
}  // namespace

TEST_CASE("a rising-falling path is not rooted y-monotone") {
    const auto g = rising_falling_path();
    CHECK_FALSE(is_rooted_y_monotone(g, kStdY));
    CHECK_FALSE(is_rooted_y_monotone_counting(g, kStdY));
    CHECK_FALSE(is_rooted_xy_monotone(g, kStdSys));
    CHECK_FALSE(is_rooted_xy_monotone_counting(g, kStdSys));
    // but some direction serves both of its vertices
    const auto axis = uniform_monotone_axis(g);
    REQUIRE(axis.has_value());
    CHECK(is_rooted_y_monotone(g, *axis));
    CHECK(oracle::all_monotone_reachable(g, *axis));
}

TEST_CASE("stars are monotone for every direction") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {3, 2}, {-1, 4}, {-2, -3}, {5, -1}}, 0);
    const GeometricGraph g(ps, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    testsupport::Rng rng(5001);
    for (int k = 0; k < 30; ++k) {
        CHECK(is_rooted_y_monotone(g, testsupport::random_axis(rng)));
        CHECK(is_rooted_xy_monotone(g, testsupport::random_system(rng)));
    }
    CHECK(uniform_monotone_axis(g).has_value());
    CHECK(uniform_2d_monotone_system(g).has_value());
}

TEST_CASE("edges across the root line are never usable") {
    // only connection to (1,1) runs from below the root line to above it
    const auto ps = RootedPointSet::from_integers({{0, 0}, {2, -1}, {1, 1}}, 0);
    const GeometricGraph g(ps, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_rooted_y_monotone(g, kStdY));
    CHECK_FALSE(is_rooted_y_monotone_counting(g, kStdY));
}

TEST_CASE("equal-projection edges carry both directions") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {1, 2}, {-1, 2}}, 0);
    const GeometricGraph g(ps, {{0, 1}, {1, 2}});  // reach (-1,2) through the flat edge
    CHECK(is_rooted_y_monotone(g, kStdY));
    CHECK(is_rooted_y_monotone_counting(g, kStdY));
    const GeometricGraph tri(ps, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(uniform_monotone_axis(tri).has_value());
}

TEST_CASE("zero-projection points require the direct root edge") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {4, 0}, {1, 3}}, 0);
    const GeometricGraph with_edge(ps, {{0, 1}, {0, 2}});
    CHECK(is_rooted_y_monotone(with_edge, kStdY));
    CHECK(is_rooted_y_monotone_counting(with_edge, kStdY));
    // (4,0) only reachable through (1,3): |y| rises then falls
    const GeometricGraph without(ps, {{0, 2}, {1, 2}});
    CHECK_FALSE(is_rooted_y_monotone(without, kStdY));
    CHECK_FALSE(is_rooted_y_monotone_counting(without, kStdY));
}

TEST_CASE("disconnected graphs are rejected") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {1, 2}, {5, 7}, {6, 1}}, 0);
    const GeometricGraph g(ps, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(is_rooted_y_monotone(g, kStdY), DisconnectedGraphError);
    CHECK_THROWS_AS(is_rooted_xy_monotone(g, kStdSys), DisconnectedGraphError);
    CHECK_THROWS_AS(uniform_monotone_axis(g), DisconnectedGraphError);
    CHECK_THROWS_AS(uniform_2d_monotone_system(g), DisconnectedGraphError);
}

TEST_CASE("fixed-direction recognizers agree with the path oracle") {
    testsupport::Rng rng(5003);
    for (int rep = 0; rep < 150; ++rep) {
        const std::size_t n = 2 + rng.next() % 8;
        const auto g = testsupport::random_connected_graph(rng, n);
        const Axis a = testsupport::random_clear_axis(rng, g.points());
        const bool want = oracle::all_monotone_reachable(g, a);
        CHECK(is_rooted_y_monotone(g, a) == want);
        CHECK(is_rooted_y_monotone_counting(g, a) == want);
        CHECK(is_rooted_y_monotone(g, a.flipped()) == want);

        const OrthoSystem s = testsupport::random_clear_system(rng, g.points());
        const bool want2 = oracle::all_monotone_reachable(g, s);
        CHECK(is_rooted_xy_monotone(g, s) == want2);
        CHECK(is_rooted_xy_monotone_counting(g, s) == want2);
    }
}

TEST_CASE("reachability and counting routes agree on critical directions too") {
    testsupport::Rng rng(5005);
    for (int rep = 0; rep < 80; ++rep) {
        const std::size_t n = 3 + rng.next() % 6;
        const auto g = testsupport::random_connected_graph(rng, n);
        // evaluate exactly at event directions, where ties and zero
        // projections are live
        const auto crit = recognition_axes(g);
        for (const Axis& a : crit.axes)
            CHECK(is_rooted_y_monotone(g, a) == is_rooted_y_monotone_counting(g, a));
        const auto crit2 = recognition_systems(g);
        for (const OrthoSystem& s : crit2.systems)
            CHECK(is_rooted_xy_monotone(g, s) == is_rooted_xy_monotone_counting(g, s));
    }
}

TEST_CASE("uniform sweeps match fresh evaluation at every critical direction") {
    // medium graphs: too large for the path oracle, ideal for checking the
    // incremental witness-set maintenance against direct recomputation
    testsupport::Rng rng(5009);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 10 + rng.next() % 31;
        const auto g = testsupport::random_connected_graph(rng, n, 1.0);

        const auto crit = recognition_axes(g);
        std::optional<Axis> expected;
        for (const Axis& a : crit.axes)
            if (is_rooted_y_monotone(g, a)) {
                expected = a;
                break;
            }
        const auto got = uniform_monotone_axis(g);
        CHECK(got.has_value() == expected.has_value());
        if (got && expected) CHECK(*got == *expected);

        const auto crit2 = recognition_systems(g);
        std::optional<OrthoSystem> expected2;
        for (const OrthoSystem& s : crit2.systems)
            if (is_rooted_xy_monotone(g, s)) {
                expected2 = s;
                break;
            }
        const auto got2 = uniform_2d_monotone_system(g);
        CHECK(got2.has_value() == expected2.has_value());
        if (got2 && expected2) CHECK(*got2 == *expected2);
    }

    // Construction outputs pass somewhere mid-sequence, so the incremental
    // state must stay correct across a long run of processed events.
    testsupport::Rng rng2(5011);
    for (int rep = 0; rep < 10; ++rep) {
        const auto ps = testsupport::random_point_set(rng2, 12 + rng2.next() % 24, 100000);
        const Axis target = testsupport::random_clear_axis(rng2, ps);
        const auto g = mmst::ymmst(ps, target).to_graph();
        const auto crit = recognition_axes(g);
        std::optional<Axis> expected;
        for (const Axis& a : crit.axes)
            if (is_rooted_y_monotone(g, a)) {
                expected = a;
                break;
            }
        const auto got = uniform_monotone_axis(g);
        REQUIRE(got.has_value());
        REQUIRE(expected.has_value());
        CHECK(*got == *expected);
    }
}

TEST_CASE("uniform recognizers agree with exhaustive search over critical directions") {
    testsupport::Rng rng(5007);
    for (int rep = 0; rep < 120; ++rep) {
        const std::size_t n = 2 + rng.next() % 8;
        const auto g = testsupport::random_connected_graph(rng, n);

        const auto axis = uniform_monotone_axis(g);
        bool oracle_found = false;
        for (const Axis& a : recognition_axes(g).axes)
            if (oracle::all_monotone_reachable(g, a)) {
                oracle_found = true;
                break;
            }
        CHECK(axis.has_value() == oracle_found);
        if (axis) {
            CHECK(is_rooted_y_monotone(g, *axis));
            CHECK(oracle::all_monotone_reachable(g, *axis));
        }

        const auto sys = uniform_2d_monotone_system(g);
        bool oracle_found2 = false;
        for (const OrthoSystem& s : recognition_systems(g).systems)
            if (oracle::all_monotone_reachable(g, s)) {
                oracle_found2 = true;
                break;
            }
        CHECK(sys.has_value() == oracle_found2);
        if (sys) {
            CHECK(is_rooted_xy_monotone(g, *sys));
            CHECK(oracle::all_monotone_reachable(g, *sys));
        }
    }
}
