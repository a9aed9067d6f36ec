#include <cmath>

#include "doctest.h"
#include "mmst/errors.hpp"
#include "mmst/oracle.hpp"
#include "mmst/recognition.hpp"
#include "mmst/ymmst.hpp"
#include "support.hpp"

using namespace mmst;

namespace {
const Axis kStdY = Axis::from_direction(0, 1);
}

TEST_CASE("parabola points chain into the sorted path") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {1, 1}, {2, 4}, {3, 9}}, 0);
    const auto tree = ymmst_one_side(ps, kStdY);
    CHECK(tree.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("two points make a single edge") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {1, 2}}, 0);
    CHECK(ymmst_one_side(ps, kStdY).edges() == std::vector<Edge>{{0, 1}});
    const auto ps2 = RootedPointSet::from_integers({{0, 0}, {5, 3}}, 0);
    CHECK(ymmst(ps2, kStdY).edges() == std::vector<Edge>{{0, 1}});
    CHECK(ymmst(ps2, kStdY).cost() == doctest::Approx(std::sqrt(34.0)));
}

TEST_CASE("one-side example prefers the closer prefix point") {
    const auto ps = RootedPointSet::from_decimals({{"0", "0"}, {"1", "1"}, {"-1", "2.5"}}, 0);
    const auto tree = ymmst_one_side(ps, kStdY);
    // d^2((-1,2.5),(1,1)) = 6.25 beats d^2 to the root 7.25
    CHECK(tree.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("one-side preconditions") {
    const auto mixed = RootedPointSet::from_integers({{0, 0}, {1, 2}, {1, -2}}, 0);
    CHECK_THROWS_AS(ymmst_one_side(mixed, kStdY), InvalidInputError);
    const auto boundary = RootedPointSet::from_integers({{0, 0}, {1, 0}, {1, 2}}, 0);
    CHECK_THROWS_AS(ymmst_one_side(boundary, kStdY), DegeneracyError);
}

TEST_CASE("full construction splits at the root line") {
    const auto ps = RootedPointSet::from_decimals(
        {{"0", "0"}, {"1", "1"}, {"-1", "2.5"}, {"0.5", "-1"}}, 0);
    const auto tree = ymmst(ps, kStdY);
    CHECK(tree.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("points on the splitting line are rejected by the public entry") {
    const auto ps = RootedPointSet::from_integers({{0, 0}, {3, 0}, {1, 2}}, 0);
    CHECK_THROWS_WITH_AS(ymmst(ps, kStdY), doctest::Contains("1"), DegeneracyError);
    // the closed rule places the boundary point in both halves, parent root
    const auto halves = detail::ymmst_with_sequences(ps, kStdY, BoundaryRule::both_sides);
    CHECK(halves.tree.parent(1) == 0);
    CHECK(halves.seq_minus == std::vector<std::uint32_t>{0, 1});
    CHECK(halves.seq_plus == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("edge sets match the brute-force oracle on random instances") {
    testsupport::Rng rng(1001);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 2 + rng.next() % 199;
        const auto ps = testsupport::random_point_set(rng, n);
        for (int k = 0; k < 5; ++k) {
            const Axis a = testsupport::random_clear_axis(rng, ps);
            const auto fast = ymmst(ps, a);
            const auto brute = oracle::brute_parent_ymmst(ps, a);
            CHECK(fast.edges() == brute.edges());
            CHECK(fast.cost() == doctest::Approx(brute.cost()).epsilon(1e-12));
        }
    }
}

TEST_CASE("output is rooted monotone along the same axis") {
    testsupport::Rng rng(1003);
    for (int rep = 0; rep < 20; ++rep) {
        const auto ps = testsupport::random_point_set(rng, 3 + rng.next() % 60);
        const Axis a = testsupport::random_clear_axis(rng, ps);
        const auto tree = ymmst(ps, a);
        CHECK(is_rooted_y_monotone(tree.to_graph(), a));
    }
}

TEST_CASE("no edge crosses the root line") {
    testsupport::Rng rng(1005);
    for (int rep = 0; rep < 20; ++rep) {
        const auto ps = testsupport::random_point_set(rng, 3 + rng.next() % 60);
        const Axis a = testsupport::random_clear_axis(rng, ps);
        for (const auto& e : ymmst(ps, a).edges()) {
            const int128 pu = projection_value(ps.exact(e.first), a);
            const int128 pv = projection_value(ps.exact(e.second), a);
            CHECK_FALSE((pu < 0 && pv > 0));
            CHECK_FALSE((pu > 0 && pv < 0));
        }
    }
}

TEST_CASE("parents are certified nearest admissible predecessors") {
    testsupport::Rng rng(1007);
    for (int rep = 0; rep < 15; ++rep) {
        const auto ps = testsupport::random_point_set(rng, 3 + rng.next() % 40);
        const Axis a = testsupport::random_clear_axis(rng, ps);
        const auto tree = ymmst(ps, a);
        // no point with strictly smaller |projection| on the same side may be
        // strictly closer than the chosen parent
        for (std::uint32_t v = 0; v < ps.size(); ++v) {
            if (v == ps.root()) continue;
            const uint128 pd = sq_dist(ps.exact(v), ps.exact(tree.parent(v)));
            const int128 pv = projection_value(ps.exact(v), a);
            for (std::uint32_t u = 0; u < ps.size(); ++u) {
                if (u == v) continue;
                const int128 pu = projection_value(ps.exact(u), a);
                if ((pv > 0 && pu < 0) || (pv < 0 && pu > 0)) continue;
                if (abs128(pu) >= abs128(pv)) continue;
                CHECK(sq_dist(ps.exact(v), ps.exact(u)) >= pd);
            }
        }
    }
}

TEST_CASE("axis flip leaves the tree unchanged") {
    testsupport::Rng rng(1009);
    for (int rep = 0; rep < 20; ++rep) {
        const auto ps = testsupport::random_point_set(rng, 3 + rng.next() % 40);
        const Axis a = testsupport::random_clear_axis(rng, ps);
        const auto t1 = ymmst(ps, a);
        const auto t2 = ymmst(ps, a.flipped());
        CHECK(t1.edges() == t2.edges());
    }
}
