#include "mmst/ymmst.hpp"

#include <algorithm>
#include <cassert>

#include "mmst/errors.hpp"
#include "mmst/proximity.hpp"

namespace mmst {
namespace {

using DistKey = std::pair<uint128, std::uint32_t>;

// Algorithm-1 walk over one closed half. `members` excludes the root; the
// final order (the half sequence) is appended to seq. Points tied on
// |projection| are ordered by distance to the preceding prefix, then index;
// general position keeps such runs at two points, but the handler is written
// for any run length so degraded inputs stay deterministic.
void solve_half(const RootedPointSet& ps, const Axis& a, std::vector<std::uint32_t> members,
                std::vector<std::uint32_t>& parent, std::vector<std::uint32_t>& seq) {
    const std::uint32_t root = ps.root();
    auto absproj = [&](std::uint32_t i) { return abs128(projection_value(ps.exact(i), a)); };
    std::sort(members.begin(), members.end(), [&](std::uint32_t l, std::uint32_t r) {
        const uint128 al = absproj(l), ar = absproj(r);
        if (al != ar) return al < ar;
        return l < r;
    });

    SemiDynamicNN nn;
    nn.insert(ps.exact(root), root);
    seq.push_back(root);

    for (std::size_t i = 0; i < members.size();) {
        std::size_t j = i;
        while (j + 1 < members.size() && absproj(members[j + 1]) == absproj(members[i])) ++j;
        if (j == i) {
            const std::uint32_t u = members[i];
            const NNHit hit = *nn.nearest(ps.exact(u));
            parent[u] = hit.id;
            nn.insert(ps.exact(u), u);
            seq.push_back(u);
            ++i;
            continue;
        }
        // Tie run: query every member against the prefix first, then settle
        // the order and let later members consider earlier ones as parents.
        std::vector<std::pair<DistKey, std::uint32_t>> run;
        run.reserve(j - i + 1);
        for (std::size_t k = i; k <= j; ++k) {
            const std::uint32_t u = members[k];
            const NNHit hit = *nn.nearest(ps.exact(u));
            run.push_back({{hit.sq, hit.id}, u});
        }
        std::sort(run.begin(), run.end(), [](const auto& l, const auto& r) {
            if (l.first.first != r.first.first) return l.first.first < r.first.first;
            return l.second < r.second;
        });
        for (std::size_t k = 0; k < run.size(); ++k) {
            const std::uint32_t u = run[k].second;
            DistKey best = run[k].first;
            for (std::size_t e = 0; e < k; ++e) {
                const std::uint32_t v = run[e].second;
                best = std::min(best, DistKey{sq_dist(ps.exact(u), ps.exact(v)), v});
            }
            parent[u] = best.second;
        }
        for (const auto& entry : run) {
            nn.insert(ps.exact(entry.second), entry.second);
            seq.push_back(entry.second);
        }
        i = j + 1;
    }
}

}  // namespace

namespace detail {

YmmstHalves ymmst_with_sequences(const RootedPointSet& ps, const Axis& a, BoundaryRule rule) {
    const std::uint32_t root = ps.root();
    std::vector<std::uint32_t> minus, plus;
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        if (i == root) continue;
        const int s = sign128(projection_value(ps.exact(i), a));
        if (s == 0 && rule == BoundaryRule::reject)
            throw DegeneracyError("point " + std::to_string(i) +
                                  " projects onto the root along the requested axis");
        if (s <= 0) minus.push_back(i);
        if (s >= 0) plus.push_back(i);
    }

    std::vector<std::uint32_t> parent(ps.size());
    parent[root] = root;
    std::vector<std::uint32_t> seq_minus, seq_plus;
    solve_half(ps, a, std::move(minus), parent, seq_minus);
#ifndef NDEBUG
    std::vector<std::uint32_t> first_pass = parent;
#endif
    solve_half(ps, a, std::move(plus), parent, seq_plus);
#ifndef NDEBUG
    // A boundary point is solved in both halves; both must hand it the root.
    for (std::uint32_t i = 0; i < ps.size(); ++i)
        if (i != root && sign128(projection_value(ps.exact(i), a)) == 0)
            assert(first_pass[i] == parent[i] && parent[i] == root);
#endif
    return YmmstHalves{RootedTree(ps, std::move(parent)), std::move(seq_minus), std::move(seq_plus)};
}

}  // namespace detail

RootedTree ymmst(const RootedPointSet& ps, const Axis& a) {
    return detail::ymmst_with_sequences(ps, a, BoundaryRule::reject).tree;
}

RootedTree ymmst_one_side(const RootedPointSet& ps, const Axis& a) {
    const std::uint32_t root = ps.root();
    int side = 0;
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        if (i == root) continue;
        const int s = sign128(projection_value(ps.exact(i), a));
        if (s == 0)
            throw DegeneracyError("point " + std::to_string(i) +
                                  " projects onto the root along the requested axis");
        if (side == 0) side = s;
        if (s != side)
            throw InvalidInputError("ymmst_one_side requires all points on one side of the axis");
    }
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < ps.size(); ++i)
        if (i != root) members.push_back(i);
    std::vector<std::uint32_t> parent(ps.size());
    parent[root] = root;
    std::vector<std::uint32_t> seq;
    solve_half(ps, a, std::move(members), parent, seq);
    return RootedTree(ps, std::move(parent));
}

}  // namespace mmst
