#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "mmst/errors.hpp"
#include "mmst/geometry.hpp"

namespace mmst {

// Query answer: the stored id and its exact squared lattice distance. Ties on
// distance go to the smaller id, which makes every consumer deterministic.
struct NNHit {
    std::uint32_t id = 0;
    uint128 sq = 0;
};

namespace detail {

struct PtId {
    ExactPoint p;
    std::uint32_t id;
};

constexpr std::size_t kKdLeaf = 16;

inline void kd_consider(const PtId& e, const ExactPoint& q, NNHit& best) {
    const uint128 sq = sq_dist(e.p, q);
    if (sq < best.sq || (sq == best.sq && e.id < best.id)) best = {e.id, sq};
}

inline void kd_build(std::span<PtId> s, bool axis_x) {
    if (s.size() <= kKdLeaf) return;
    const std::size_t mid = s.size() / 2;
    std::nth_element(s.begin(), s.begin() + mid, s.end(), [axis_x](const PtId& a, const PtId& b) {
        return axis_x ? a.p.x < b.p.x : a.p.y < b.p.y;
    });
    kd_build(s.first(mid), !axis_x);
    kd_build(s.subspan(mid + 1), !axis_x);
}

inline void kd_query(std::span<const PtId> s, bool axis_x, const ExactPoint& q, NNHit& best) {
    if (s.size() <= kKdLeaf) {
        for (const PtId& e : s) kd_consider(e, q, best);
        return;
    }
    const std::size_t mid = s.size() / 2;
    kd_consider(s[mid], q, best);
    const std::int64_t delta = axis_x ? q.x - s[mid].p.x : q.y - s[mid].p.y;
    const auto left = s.first(mid);
    const auto right = s.subspan(mid + 1);
    const auto near = delta <= 0 ? left : right;
    const auto far = delta <= 0 ? right : left;
    kd_query(near, !axis_x, q, best);
    // The far side may still hold an equal-distance smaller id, so prune only
    // on a strict excess.
    const uint128 plane = static_cast<uint128>(static_cast<int128>(delta) * delta);
    if (plane <= best.sq) kd_query(far, !axis_x, q, best);
}

inline constexpr uint128 kNoHit = ~static_cast<uint128>(0);

}  // namespace detail

// Insert-only closest-point structure: static kd-trees of distinct power-of-
// two sizes merged by the logarithmic method, queried with exact best-first
// pruning. Insertion of n points costs O(n log^2 n) total and a query
// O(log^2 n) on balanced data, which is validated as a perf smoke rather
// than per call.
class SemiDynamicNN {
public:
    void insert(const ExactPoint& p, std::uint32_t id) {
        std::vector<detail::PtId> merged{{p, id}};
        while (!trees_.empty() && trees_.back().size() == merged.size()) {
            merged.insert(merged.end(), trees_.back().begin(), trees_.back().end());
            trees_.pop_back();
        }
        detail::kd_build(std::span<detail::PtId>(merged), true);
        trees_.push_back(std::move(merged));
        ++size_;
    }

    std::optional<NNHit> nearest(const ExactPoint& q) const {
        if (size_ == 0) return std::nullopt;
        NNHit best{std::numeric_limits<std::uint32_t>::max(), detail::kNoHit};
        for (const auto& t : trees_) detail::kd_query(std::span<const detail::PtId>(t), true, q, best);
        return best;
    }

    std::size_t size() const { return size_; }
    std::size_t substructure_count() const { return trees_.size(); }

private:
    std::vector<std::vector<detail::PtId>> trees_;  // sizes strictly decreasing powers of two
    std::size_t size_ = 0;
};

// As above, with a totally ordered attribute per point and queries restricted
// to an attribute interval. Each static structure is a balanced tree over
// attribute order whose nodes own kd-trees of their canonical ranges; a range
// decomposes into O(log n) canonical pieces, adding one logarithmic factor.
template <typename Attr>
class SemiDynamicRangeNN {
public:
    void insert(const ExactPoint& p, const Attr& attr, std::uint32_t id) {
        Structure merged;
        merged.sorted.push_back(Entry{p, attr, id});
        while (!structures_.empty() && structures_.back().sorted.size() == merged.sorted.size()) {
            std::vector<Entry> joined;
            joined.reserve(merged.sorted.size() * 2);
            std::merge(merged.sorted.begin(), merged.sorted.end(), structures_.back().sorted.begin(),
                       structures_.back().sorted.end(), std::back_inserter(joined), entry_less);
            merged.sorted = std::move(joined);
            structures_.pop_back();
        }
        merged.build();
        structures_.push_back(std::move(merged));
        ++size_;
    }

    std::optional<NNHit> nearest_in_range(const ExactPoint& q, const Attr& lo, const Attr& hi) const {
        if (hi < lo) throw InvalidInputError("attribute range is empty (lo > hi)");
        NNHit best{std::numeric_limits<std::uint32_t>::max(), detail::kNoHit};
        for (const auto& s : structures_) {
            const auto i0 = std::lower_bound(s.sorted.begin(), s.sorted.end(), lo,
                                             [](const Entry& e, const Attr& v) { return e.attr < v; }) -
                            s.sorted.begin();
            const auto i1 = std::upper_bound(s.sorted.begin(), s.sorted.end(), hi,
                                             [](const Attr& v, const Entry& e) { return v < e.attr; }) -
                            s.sorted.begin();
            if (i0 < i1)
                s.query(0, static_cast<std::uint32_t>(i0), static_cast<std::uint32_t>(i1), q, best);
        }
        if (best.sq == detail::kNoHit) return std::nullopt;
        return best;
    }

    std::size_t size() const { return size_; }
    std::size_t substructure_count() const { return structures_.size(); }

private:
    struct Entry {
        ExactPoint p;
        Attr attr;
        std::uint32_t id;
    };

    static bool entry_less(const Entry& a, const Entry& b) {
        if (a.attr < b.attr) return true;
        if (b.attr < a.attr) return false;
        return a.id < b.id;
    }

    struct Node {
        std::uint32_t lo, hi;           // range of sorted indices
        std::uint32_t left = 0, right = 0;  // 0 = none (root is never a child)
        std::vector<detail::PtId> kd;
    };

    struct Structure {
        std::vector<Entry> sorted;
        std::vector<Node> nodes;

        std::uint32_t build_node(std::uint32_t lo, std::uint32_t hi) {
            const auto idx = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back(Node{lo, hi, 0, 0, {}});
            {
                std::vector<detail::PtId> kd;
                kd.reserve(hi - lo);
                for (std::uint32_t i = lo; i < hi; ++i) kd.push_back({sorted[i].p, sorted[i].id});
                detail::kd_build(std::span<detail::PtId>(kd), true);
                nodes[idx].kd = std::move(kd);
            }
            if (hi - lo > detail::kKdLeaf) {
                const std::uint32_t mid = lo + (hi - lo) / 2;
                const std::uint32_t l = build_node(lo, mid);
                nodes[idx].left = l;
                const std::uint32_t r = build_node(mid, hi);
                nodes[idx].right = r;
            }
            return idx;
        }

        void build() {
            nodes.clear();
            build_node(0, static_cast<std::uint32_t>(sorted.size()));
        }

        void query(std::uint32_t node, std::uint32_t i0, std::uint32_t i1, const ExactPoint& q,
                   NNHit& best) const {
            const Node& nd = nodes[node];
            const std::uint32_t a = std::max(nd.lo, i0), b = std::min(nd.hi, i1);
            if (a >= b) return;
            if (a == nd.lo && b == nd.hi) {
                detail::kd_query(std::span<const detail::PtId>(nd.kd), true, q, best);
                return;
            }
            if (nd.left == 0 && nd.right == 0) {
                for (std::uint32_t i = a; i < b; ++i)
                    detail::kd_consider({sorted[i].p, sorted[i].id}, q, best);
                return;
            }
            query(nd.left, i0, i1, q, best);
            query(nd.right, i0, i1, q, best);
        }
    };

    std::vector<Structure> structures_;
    std::size_t size_ = 0;
};

}  // namespace mmst
