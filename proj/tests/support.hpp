#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "mmst/critical.hpp"
#include "mmst/graph.hpp"

// Deterministic generators shared by the unit and acceptance suites. All
// randomness flows through splitmix64 so runs are identical across platforms
// and standard-library versions.
namespace testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline bool has_collinear_triple(const std::vector<std::array<std::int64_t, 2>>& pts,
                                 std::array<std::size_t, 3>* out = nullptr) {
    const auto bad = mmst::find_collinear_triple(pts);
    if (bad && out) *out = *bad;
    return bad.has_value();
}

// Random distinct integer coordinates in general position; the root is index
// 0 at a random location. Violating points are resampled until clean.
inline mmst::RootedPointSet random_point_set(Rng& rng, std::size_t n,
                                             std::int64_t coord_range = 1000000) {
    std::vector<std::array<std::int64_t, 2>> pts;
    std::set<std::pair<std::int64_t, std::int64_t>> used;
    while (pts.size() < n) {
        const std::int64_t x = rng.range(-coord_range, coord_range);
        const std::int64_t y = rng.range(-coord_range, coord_range);
        if (used.insert({x, y}).second) pts.push_back({x, y});
    }
    std::array<std::size_t, 3> bad{};
    while (has_collinear_triple(pts, &bad)) {
        const std::size_t victim = bad[2];
        used.erase({pts[victim][0], pts[victim][1]});
        for (;;) {
            const std::int64_t x = rng.range(-coord_range, coord_range);
            const std::int64_t y = rng.range(-coord_range, coord_range);
            if (used.insert({x, y}).second) {
                pts[victim] = {x, y};
                break;
            }
        }
    }
    mmst::PointSetOptions opts;
    opts.full_check_limit = 0;  // generator already certified general position
    opts.sample_checks = 0;
    return mmst::RootedPointSet::from_integers(pts, 0, opts);
}

inline mmst::Axis random_axis(Rng& rng) {
    for (;;) {
        const std::int64_t dx = rng.range(-1000000, 1000000);
        const std::int64_t dy = rng.range(-1000000, 1000000);
        if (dx != 0 || dy != 0) return mmst::Axis::from_direction(dx, dy);
    }
}

inline mmst::OrthoSystem random_system(Rng& rng) {
    for (;;) {
        const std::int64_t dx = rng.range(-1000000, 1000000);
        const std::int64_t dy = rng.range(-1000000, 1000000);
        if (dx != 0 || dy != 0) return mmst::OrthoSystem::from_direction(dx, dy);
    }
}

inline bool axis_hits_point(const mmst::RootedPointSet& ps, const mmst::Axis& a) {
    for (std::uint32_t i = 0; i < ps.size(); ++i)
        if (i != ps.root() && mmst::projection_value(ps.exact(i), a) == 0) return true;
    return false;
}

inline bool system_hits_point(const mmst::RootedPointSet& ps, const mmst::OrthoSystem& sys) {
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        if (i == ps.root()) continue;
        if (sys.x_value(ps.exact(i)) == 0 || sys.y_value(ps.exact(i)) == 0) return true;
    }
    return false;
}

inline mmst::Axis random_clear_axis(Rng& rng, const mmst::RootedPointSet& ps) {
    for (;;) {
        const mmst::Axis a = random_axis(rng);
        if (!axis_hits_point(ps, a)) return a;
    }
}

inline mmst::OrthoSystem random_clear_system(Rng& rng, const mmst::RootedPointSet& ps) {
    for (;;) {
        const mmst::OrthoSystem s = random_system(rng);
        if (!system_hits_point(ps, s)) return s;
    }
}

// Random connected graph: a random spanning tree plus extra edges.
inline mmst::GeometricGraph random_connected_graph(Rng& rng, std::size_t n, double extra_edges = 1.5) {
    mmst::RootedPointSet ps = random_point_set(rng, n, 1000);
    std::vector<mmst::Edge> edges;
    std::set<mmst::Edge> have;
    for (std::uint32_t v = 1; v < n; ++v) {
        const auto u = static_cast<std::uint32_t>(rng.next() % v);
        const mmst::Edge e{std::min(u, v), std::max(u, v)};
        if (have.insert(e).second) edges.push_back(e);
    }
    const auto extras = static_cast<std::size_t>(extra_edges * static_cast<double>(n));
    for (std::size_t k = 0; k < extras && n >= 2; ++k) {
        const auto a = static_cast<std::uint32_t>(rng.next() % n);
        const auto b = static_cast<std::uint32_t>(rng.next() % n);
        if (a == b) continue;
        const mmst::Edge e{std::min(a, b), std::max(a, b)};
        if (have.insert(e).second) edges.push_back(e);
    }
    return mmst::GeometricGraph(std::move(ps), std::move(edges));
}

inline bool same_edges(const mmst::RootedTree& a, const mmst::RootedTree& b) {
    return a.edges() == b.edges();
}

}  // namespace testsupport
