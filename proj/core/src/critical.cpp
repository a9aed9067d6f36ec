#include "mmst/critical.hpp"

#include <algorithm>
#include <cassert>

#include "mmst/errors.hpp"

namespace mmst {
namespace {

struct Dir {
    std::int64_t dx, dy;
};

// dy > 0, or dy == 0 and dx > 0
Dir canonical_half(std::int64_t dx, std::int64_t dy) {
    if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

Dir canonical_quarter(std::int64_t dx, std::int64_t dy) {
    Dir d = canonical_half(dx, dy);
    if (d.dx <= 0) d = {d.dy, -d.dx};
    return d;
}

struct SlopeEntry {
    std::int64_t dx, dy;  // canonical direction of the even axis / system
    std::uint32_t a, b;   // generating pair
};

template <typename MakeDir>
std::vector<SlopeEntry> sorted_entries(const RootedPointSet& ps, const std::vector<Edge>& pairs,
                                       MakeDir make_dir) {
    std::vector<SlopeEntry> entries;
    entries.reserve(pairs.size());
    for (const Edge& e : pairs) {
        const Dir d = make_dir(ps.exact(e.first), ps.exact(e.second));
        entries.push_back(SlopeEntry{d.dx, d.dy, e.first, e.second});
    }
    std::sort(entries.begin(), entries.end(), [](const SlopeEntry& l, const SlopeEntry& r) {
        const int128 c = static_cast<int128>(l.dx) * r.dy - static_cast<int128>(l.dy) * r.dx;
        if (c != 0) return c > 0;
        return std::pair{l.a, l.b} < std::pair{r.a, r.b};
    });
    return entries;
}

bool entry_slope_equal(const SlopeEntry& l, const SlopeEntry& r) {
    return static_cast<int128>(l.dx) * r.dy == static_cast<int128>(l.dy) * r.dx;
}

}  // namespace

std::vector<Edge> all_point_pairs(const RootedPointSet& ps) {
    std::vector<Edge> pairs;
    const std::size_t n = ps.size();
    pairs.reserve(n * (n - 1) / 2);
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

std::vector<Edge> graph_event_pairs(const GeometricGraph& g) {
    std::vector<Edge> pairs = g.edges();
    const std::uint32_t r = g.root();
    for (std::uint32_t q = 0; q < g.size(); ++q) {
        if (q == r) continue;
        const Edge e{std::min(r, q), std::max(r, q)};
        if (!g.has_edge(e.first, e.second)) pairs.push_back(e);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

CriticalAxes build_critical_axes(const RootedPointSet& ps, const std::vector<Edge>& pairs) {
    if (ps.size() < 2 || pairs.empty())
        throw InvalidInputError("critical axes require at least one point pair");
    const std::uint32_t root = ps.root();

    // perpendicular of the pair line
    const auto entries = sorted_entries(ps, pairs, [](const ExactPoint& pa, const ExactPoint& pb) {
        return canonical_half(-(pb.y - pa.y), pb.x - pa.x);
    });

    CriticalAxes out;
    std::vector<Axis> evens;
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        evens.push_back(Axis::from_direction(entries[i].dx, entries[i].dy));
        out.tie_pairs.emplace_back();
        out.root_point.emplace_back();
        while (j < entries.size() && entry_slope_equal(entries[i], entries[j])) {
            const auto& e = entries[j];
            if (e.a == root || e.b == root) {
                // At most one root pair can share a perpendicular slope; a
                // second one would mean three collinear points.
                assert(!out.root_point.back().has_value());
                out.root_point.back() = e.a == root ? e.b : e.a;
            } else {
                out.tie_pairs.back().emplace_back(e.a, e.b);
            }
            ++j;
        }
        i = j;
    }

    const std::size_t m = evens.size();
    out.axes.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        out.axes.push_back(evens[i]);
        out.axes.push_back(i + 1 < m ? bisector_between(evens[i], evens[i + 1])
                                     : bisector_toward_pi(evens[i]));
    }
    return out;
}

CriticalAxes critical_axes_detail(const RootedPointSet& ps) {
    if (ps.size() < 2) throw InvalidInputError("critical_axes requires |P| >= 2");
    return build_critical_axes(ps, all_point_pairs(ps));
}

std::vector<Axis> critical_axes(const RootedPointSet& ps) { return critical_axes_detail(ps).axes; }

CriticalAxes recognition_axes(const GeometricGraph& g) {
    if (g.size() < 2) throw InvalidInputError("recognition axes require |P| >= 2");
    return build_critical_axes(g.points(), graph_event_pairs(g));
}

CriticalSystems build_critical_systems(const RootedPointSet& ps, const std::vector<Edge>& pairs) {
    if (ps.size() < 2 || pairs.empty())
        throw InvalidInputError("critical systems require at least one point pair");
    const std::uint32_t root = ps.root();

    const auto entries = sorted_entries(ps, pairs, [](const ExactPoint& pa, const ExactPoint& pb) {
        return canonical_quarter(pb.x - pa.x, pb.y - pa.y);
    });

    CriticalSystems out;
    std::vector<OrthoSystem> evens;
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        evens.push_back(OrthoSystem::from_direction(entries[i].dx, entries[i].dy));
        out.tie_pairs.emplace_back();
        out.root_points.emplace_back();
        while (j < entries.size() && entry_slope_equal(entries[i], entries[j])) {
            const auto& e = entries[j];
            if (e.a == root || e.b == root) {
                out.root_points.back().push_back(e.a == root ? e.b : e.a);
            } else {
                out.tie_pairs.back().emplace_back(e.a, e.b);
            }
            ++j;
        }
        assert(out.root_points.back().size() <= 2);
        i = j;
    }

    const std::size_t m = evens.size();
    out.systems.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        out.systems.push_back(evens[i]);
        out.systems.push_back(i + 1 < m ? bisector_between(evens[i], evens[i + 1])
                                        : bisector_toward_half_pi(evens[i]));
    }
    return out;
}

CriticalSystems critical_systems_detail(const RootedPointSet& ps) {
    if (ps.size() < 2) throw InvalidInputError("critical_systems requires |P| >= 2");
    return build_critical_systems(ps, all_point_pairs(ps));
}

std::vector<OrthoSystem> critical_systems(const RootedPointSet& ps) {
    return critical_systems_detail(ps).systems;
}

CriticalSystems recognition_systems(const GeometricGraph& g) {
    if (g.size() < 2) throw InvalidInputError("recognition systems require |P| >= 2");
    return build_critical_systems(g.points(), graph_event_pairs(g));
}

}  // namespace mmst
