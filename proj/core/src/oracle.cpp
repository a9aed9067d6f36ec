#include "mmst/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "mmst/errors.hpp"

namespace mmst::oracle {
namespace {

constexpr std::size_t kUniformBound = 64;
constexpr std::size_t kPathBound = 12;
constexpr double kCostSlack = 1e-12;

using DistKey = std::pair<uint128, std::uint32_t>;

DistKey key_to(const RootedPointSet& ps, std::uint32_t from, std::uint32_t to) {
    return {sq_dist(ps.exact(from), ps.exact(to)), to};
}

// Parent rule over one closed half: members ordered by |projection| with the
// tie rule "closer to the preceding prefix first, then smaller index".
void solve_half(const RootedPointSet& ps, const Axis& a, std::vector<std::uint32_t> members,
                std::vector<std::uint32_t>& parent) {
    const std::uint32_t root = ps.root();
    auto absproj = [&](std::uint32_t i) { return abs128(projection_value(ps.exact(i), a)); };
    std::sort(members.begin(), members.end(), [&](std::uint32_t l, std::uint32_t r) {
        const uint128 al = absproj(l), ar = absproj(r);
        if (al != ar) return al < ar;
        return l < r;
    });

    std::vector<std::uint32_t> placed{root};
    auto nearest_placed = [&](std::uint32_t u, std::size_t count) {
        DistKey best{~static_cast<uint128>(0), std::numeric_limits<std::uint32_t>::max()};
        for (std::size_t i = 0; i < count; ++i) best = std::min(best, key_to(ps, u, placed[i]));
        return best;
    };

    for (std::size_t i = 0; i < members.size();) {
        std::size_t j = i;
        while (j + 1 < members.size() && absproj(members[j + 1]) == absproj(members[i])) ++j;
        const std::size_t prefix = placed.size();
        std::vector<std::pair<DistKey, std::uint32_t>> run;
        for (std::size_t k = i; k <= j; ++k) {
            const std::uint32_t u = members[k];
            run.push_back({nearest_placed(u, prefix), u});
        }
        std::sort(run.begin(), run.end(), [](const auto& l, const auto& r) {
            if (l.first.first != r.first.first) return l.first.first < r.first.first;
            return l.second < r.second;
        });
        for (std::size_t k = 0; k < run.size(); ++k) {
            const std::uint32_t u = run[k].second;
            DistKey best = run[k].first;
            for (std::size_t e = 0; e < k; ++e) best = std::min(best, key_to(ps, u, run[e].second));
            parent[u] = best.second;
            placed.push_back(u);
        }
        i = j + 1;
    }
}

}  // namespace

RootedTree brute_parent_ymmst(const RootedPointSet& ps, const Axis& a) {
    const std::uint32_t root = ps.root();
    std::vector<std::uint32_t> parent(ps.size());
    parent[root] = root;
    std::vector<std::uint32_t> minus, plus;
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        if (i == root) continue;
        const int s = sign128(projection_value(ps.exact(i), a));
        if (s <= 0) minus.push_back(i);
        if (s >= 0) plus.push_back(i);
    }
    solve_half(ps, a, std::move(minus), parent);
    solve_half(ps, a, std::move(plus), parent);
    return RootedTree(ps, std::move(parent));
}

namespace {

void solve_quadrant(const RootedPointSet& ps, const OrthoSystem& sys,
                    std::vector<std::uint32_t> members, std::vector<std::uint32_t>& parent) {
    const std::uint32_t root = ps.root();
    auto ax = [&](std::uint32_t i) { return abs128(sys.x_value(ps.exact(i))); };
    auto ay = [&](std::uint32_t i) { return abs128(sys.y_value(ps.exact(i))); };
    std::sort(members.begin(), members.end(), [&](std::uint32_t l, std::uint32_t r) {
        const uint128 yl = ay(l), yr = ay(r);
        if (yl != yr) return yl < yr;
        const uint128 xl = ax(l), xr = ax(r);
        if (xl != xr) return xl < xr;
        return l < r;
    });
    std::vector<std::uint32_t> placed{root};
    for (const std::uint32_t u : members) {
        const uint128 bound = ax(u);
        DistKey best{~static_cast<uint128>(0), std::numeric_limits<std::uint32_t>::max()};
        for (const std::uint32_t v : placed)
            if (ax(v) <= bound) best = std::min(best, key_to(ps, u, v));
        parent[u] = best.second;
        placed.push_back(u);
    }
}

std::uint8_t quadrant_mask(int sx, int sy) {
    // bit0 (+,+), bit1 (-,+), bit2 (-,-), bit3 (+,-)
    const std::uint8_t col = sx > 0 ? 0b1001 : (sx < 0 ? 0b0110 : 0b1111);
    const std::uint8_t row = sy > 0 ? 0b0011 : (sy < 0 ? 0b1100 : 0b1111);
    return col & row;
}

}  // namespace

RootedTree brute_xymmst(const RootedPointSet& ps, const OrthoSystem& sys) {
    const std::uint32_t root = ps.root();
    std::vector<std::uint32_t> parent(ps.size());
    parent[root] = root;
    for (int q = 0; q < 4; ++q) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < ps.size(); ++i) {
            if (i == root) continue;
            const auto& p = ps.exact(i);
            const std::uint8_t mask = quadrant_mask(sign128(sys.x_value(p)), sign128(sys.y_value(p)));
            if (mask & (1u << q)) members.push_back(i);
        }
        solve_quadrant(ps, sys, std::move(members), parent);
    }
    return RootedTree(ps, std::move(parent));
}

RootedTree brute_xymmst_quadrant(const RootedPointSet& ps, const OrthoSystem& sys) {
    const std::uint32_t root = ps.root();
    std::uint8_t common = 0b1111;
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        if (i == root) continue;
        const auto& p = ps.exact(i);
        const int sx = sign128(sys.x_value(p)), sy = sign128(sys.y_value(p));
        if (sx == 0 || sy == 0)
            throw DegeneracyError("point " + std::to_string(i) + " lies on a system axis");
        common &= quadrant_mask(sx, sy);
        members.push_back(i);
    }
    if (!members.empty() && common == 0)
        throw InvalidInputError("points are not confined to one quadrant");
    std::vector<std::uint32_t> parent(ps.size());
    parent[root] = root;
    solve_quadrant(ps, sys, std::move(members), parent);
    return RootedTree(ps, std::move(parent));
}

BruteUniform brute_ummst(const RootedPointSet& ps) {
    if (ps.size() > kUniformBound)
        throw InvalidInputError("brute_ummst size guard exceeded (n <= 64)");
    if (ps.size() < 2) throw InvalidInputError("brute_ummst requires |P| >= 2");
    const auto axes = critical_axes(ps);
    BruteUniform best{axes[0], brute_parent_ymmst(ps, axes[0]), 0};
    for (std::size_t i = 1; i < axes.size(); ++i) {
        RootedTree t = brute_parent_ymmst(ps, axes[i]);
        if (t.cost() < best.tree.cost() - kCostSlack) best = {axes[i], std::move(t), i};
    }
    return best;
}

BruteUniform2d brute_ummst2d(const RootedPointSet& ps) {
    if (ps.size() > kUniformBound)
        throw InvalidInputError("brute_ummst2d size guard exceeded (n <= 64)");
    if (ps.size() < 2) throw InvalidInputError("brute_ummst2d requires |P| >= 2");
    const auto systems = critical_systems(ps);
    BruteUniform2d best{systems[0], brute_xymmst(ps, systems[0]), 0};
    for (std::size_t i = 1; i < systems.size(); ++i) {
        RootedTree t = brute_xymmst(ps, systems[i]);
        if (t.cost() < best.tree.cost() - kCostSlack) best = {systems[i], std::move(t), i};
    }
    return best;
}

namespace {

// dir: 0 unknown, +1 non-decreasing, -1 non-increasing
bool step_dir(int& dir, int diff_sign) {
    if (diff_sign == 0) return true;
    if (dir == 0) {
        dir = diff_sign;
        return true;
    }
    return dir == diff_sign;
}

bool dfs_1d(const GeometricGraph& g, const std::vector<int128>& proj, std::uint32_t v,
            std::uint32_t target, std::uint32_t visited, int dir) {
    if (v == target) return true;
    for (const std::uint32_t u : g.adjacent(v)) {
        if (visited & (1u << u)) continue;
        int d = dir;
        const int diff = sign128(proj[u] - proj[v]);
        if (!step_dir(d, diff)) continue;
        if (dfs_1d(g, proj, u, target, visited | (1u << u), d)) return true;
    }
    return false;
}

bool dfs_2d(const GeometricGraph& g, const std::vector<int128>& px, const std::vector<int128>& py,
            std::uint32_t v, std::uint32_t target, std::uint32_t visited, int dx, int dy) {
    if (v == target) return true;
    for (const std::uint32_t u : g.adjacent(v)) {
        if (visited & (1u << u)) continue;
        int ddx = dx, ddy = dy;
        if (!step_dir(ddx, sign128(px[u] - px[v]))) continue;
        if (!step_dir(ddy, sign128(py[u] - py[v]))) continue;
        if (dfs_2d(g, px, py, u, target, visited | (1u << u), ddx, ddy)) return true;
    }
    return false;
}

}  // namespace

bool monotone_path_exists(const GeometricGraph& g, const Axis& a, std::uint32_t target) {
    if (g.size() > kPathBound)
        throw InvalidInputError("monotone_path_exists size guard exceeded");
    std::vector<int128> proj(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) proj[i] = projection_value(g.points().exact(i), a);
    const std::uint32_t r = g.root();
    return dfs_1d(g, proj, r, target, 1u << r, 0);
}

bool monotone_path_exists(const GeometricGraph& g, const OrthoSystem& sys, std::uint32_t target) {
    if (g.size() > kPathBound)
        throw InvalidInputError("monotone_path_exists size guard exceeded");
    std::vector<int128> px(g.size()), py(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        px[i] = sys.x_value(g.points().exact(i));
        py[i] = sys.y_value(g.points().exact(i));
    }
    const std::uint32_t r = g.root();
    return dfs_2d(g, px, py, r, target, 1u << r, 0, 0);
}

bool all_monotone_reachable(const GeometricGraph& g, const Axis& a) {
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (v != g.root() && !monotone_path_exists(g, a, v)) return false;
    return true;
}

bool all_monotone_reachable(const GeometricGraph& g, const OrthoSystem& sys) {
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (v != g.root() && !monotone_path_exists(g, sys, v)) return false;
    return true;
}

}  // namespace mmst::oracle
