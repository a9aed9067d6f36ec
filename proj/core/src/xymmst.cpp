#include "mmst/xymmst.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "mmst/errors.hpp"
#include "mmst/proximity.hpp"

namespace mmst {
namespace detail {

std::uint8_t quadrant_mask(int sx, int sy) {
    const std::uint8_t col = sx > 0 ? 0b1001 : (sx < 0 ? 0b0110 : 0b1111);
    const std::uint8_t row = sy > 0 ? 0b0011 : (sy < 0 ? 0b1100 : 0b1111);
    return col & row;
}

}  // namespace detail

namespace {

// Walk over one closed quadrant: points ordered by (abs y, abs x), each
// parented to its nearest predecessor with |x'| within [0, |x'(p)|].
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
    SemiDynamicRangeNN<uint128> rnn;
    rnn.insert(ps.exact(root), 0, root);
    for (const std::uint32_t u : members) {
        const uint128 bound = ax(u);
        const auto hit = rnn.nearest_in_range(ps.exact(u), 0, bound);
        assert(hit.has_value());  // the root's attribute 0 is in every range
        parent[u] = hit->id;
        rnn.insert(ps.exact(u), bound, u);
    }
}

}  // namespace

namespace detail {

RootedTree xymmst_impl(const RootedPointSet& ps, const OrthoSystem& sys, BoundaryRule rule) {
    const std::uint32_t root = ps.root();
    std::array<std::vector<std::uint32_t>, 4> members;
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        if (i == root) continue;
        const auto& p = ps.exact(i);
        const int sx = sign128(sys.x_value(p)), sy = sign128(sys.y_value(p));
        if ((sx == 0 || sy == 0) && rule == BoundaryRule::reject)
            throw DegeneracyError("point " + std::to_string(i) + " lies on a system axis");
        const std::uint8_t mask = quadrant_mask(sx, sy);
        for (int q = 0; q < 4; ++q)
            if (mask & (1u << q)) members[q].push_back(i);
    }
    std::vector<std::uint32_t> parent(ps.size());
    parent[root] = root;
#ifndef NDEBUG
    std::vector<char> assigned(ps.size(), 0);
#endif
    for (int q = 0; q < 4; ++q) {
#ifndef NDEBUG
        std::vector<std::uint32_t> before = parent;
#endif
        solve_quadrant(ps, sys, members[q], parent);
#ifndef NDEBUG
        for (const std::uint32_t u : members[q]) {
            // A boundary point is solved in two quadrants; both give the root.
            if (assigned[u]) assert(before[u] == parent[u] && parent[u] == root);
            assigned[u] = 1;
        }
#endif
    }
    return RootedTree(ps, std::move(parent));
}

}  // namespace detail

RootedTree xymmst(const RootedPointSet& ps, const OrthoSystem& sys) {
    return detail::xymmst_impl(ps, sys, BoundaryRule::reject);
}

RootedTree xymmst_quadrant(const RootedPointSet& ps, const OrthoSystem& sys) {
    const std::uint32_t root = ps.root();
    std::uint8_t common = 0b1111;
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        if (i == root) continue;
        const auto& p = ps.exact(i);
        const int sx = sign128(sys.x_value(p)), sy = sign128(sys.y_value(p));
        if (sx == 0 || sy == 0)
            throw DegeneracyError("point " + std::to_string(i) + " lies on a system axis");
        common &= detail::quadrant_mask(sx, sy);
        members.push_back(i);
    }
    if (!members.empty() && common == 0)
        throw InvalidInputError("xymmst_quadrant requires all points in one quadrant");
    std::vector<std::uint32_t> parent(ps.size());
    parent[root] = root;
    solve_quadrant(ps, sys, std::move(members), parent);
    return RootedTree(ps, std::move(parent));
}

}  // namespace mmst
