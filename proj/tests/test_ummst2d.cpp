#include <cmath>

#include "doctest.h"
#include "mmst/oracle.hpp"
#include "mmst/recognition.hpp"
#include "mmst/ummst2d.hpp"
#include "support.hpp"

using namespace mmst;

TEST_CASE("two points cost the pair distance at every system") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {3, 4}}, 0);
    Ummst2dSweep sweep(ps);
    do {
        CHECK(sweep.cost() == doctest::Approx(5.0));
        CHECK(sweep.tree().edges() == std::vector<Edge>{{0, 1}});
    } while (sweep.advance());
}

TEST_CASE("three nearly-horizontal points chain under a rotated system") {
    const auto ps =
        RootedPointSet::from_decimals({{"0", "0"}, {"1", "0.1"}, {"2", "-0.1"}}, 0);
    const auto res = ummst2d(ps);
    const double expected = std::sqrt(1.01) + std::sqrt(1.04);
    CHECK(res.tree.cost() == doctest::Approx(expected).epsilon(1e-9));
    CHECK(res.tree.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    // the axis-aligned split is strictly worse
    const auto axis_aligned =
        detail::xymmst_impl(ps, OrthoSystem::from_degrees(90.0), BoundaryRule::both_sides);
    CHECK(res.tree.cost() < axis_aligned.cost());
}

TEST_CASE("sweep state equals the from-scratch tree at every system") {
    testsupport::Rng rng(4001);
    for (int rep = 0; rep < 12; ++rep) {
        const std::size_t n = 3 + rng.next() % 18;
        const auto ps = testsupport::random_point_set(rng, n, 1000);
        Ummst2dSweep sweep(ps);
        std::size_t index = 0;
        do {
            const auto fresh = detail::xymmst_impl(ps, sweep.system(), BoundaryRule::both_sides);
            const auto incremental = sweep.tree();
            REQUIRE(incremental.edges() == fresh.edges());
            CHECK(incremental.cost() == doctest::Approx(fresh.cost()).epsilon(1e-12));
            CHECK(sweep.cost() == doctest::Approx(fresh.cost()).epsilon(1e-6));
            ++index;
        } while (sweep.advance());
        CHECK(index == sweep.system_count());
    }
}

TEST_CASE("cross-quadrant pairs do not disturb the state") {
    // (1,2) and (-3,1): their event system sees them in different quadrants.
    const auto ps = RootedPointSet::from_integers({{0, 0}, {1, 2}, {-3, 1}}, 0);
    Ummst2dSweep sweep(ps);
    do {
        CHECK(sweep.tree().edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    } while (sweep.advance());
}

TEST_CASE("2d optimum matches the exhaustive oracle") {
    testsupport::Rng rng(4003);
    for (int rep = 0; rep < 12; ++rep) {
        const std::size_t n = 2 + rng.next() % 29;
        const auto ps = testsupport::random_point_set(rng, n, 100000);
        const auto res = ummst2d(ps);
        const auto brute = oracle::brute_ummst2d(ps);
        CHECK(res.tree.cost() == doctest::Approx(brute.tree.cost()).epsilon(1e-9));
        const auto at_winner = oracle::brute_xymmst(ps, res.system);
        CHECK(res.tree.edges() == at_winner.edges());
    }
}

TEST_CASE("quarter rotation leaves every tree unchanged") {
    testsupport::Rng rng(4005);
    for (int rep = 0; rep < 15; ++rep) {
        const auto ps = testsupport::random_point_set(rng, 3 + rng.next() % 25, 100000);
        const OrthoSystem s = testsupport::random_clear_system(rng, ps);
        const OrthoSystem rotated =
            OrthoSystem::from_direction(-s.y_axis().dy(), s.y_axis().dx());
        CHECK(s == rotated);  // the fold itself collapses quarter turns
        const auto t1 = detail::xymmst_impl(ps, s, BoundaryRule::both_sides);
        const auto t2 = detail::xymmst_impl(ps, rotated, BoundaryRule::both_sides);
        CHECK(t1.edges() == t2.edges());
    }
}

TEST_CASE("no system beats the 2d uniform optimum") {
    testsupport::Rng rng(4007);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 3 + rng.next() % 27;
        const auto ps = testsupport::random_point_set(rng, n, 100000);
        const auto res = ummst2d(ps);
        for (int k = 0; k < 30; ++k) {
            const OrthoSystem s = testsupport::random_clear_system(rng, ps);
            const auto tree = detail::xymmst_impl(ps, s, BoundaryRule::both_sides);
            CHECK(res.tree.cost() <= tree.cost() + 1e-9);
        }
    }
}

TEST_CASE("2d output is recognized as uniform 2d monotone") {
    testsupport::Rng rng(4009);
    for (int rep = 0; rep < 8; ++rep) {
        const auto ps = testsupport::random_point_set(rng, 3 + rng.next() % 20, 100000);
        const auto res = ummst2d(ps);
        CHECK(is_rooted_xy_monotone(res.tree.to_graph(), res.system));
        CHECK(uniform_2d_monotone_system(res.tree.to_graph()).has_value());
    }
}
