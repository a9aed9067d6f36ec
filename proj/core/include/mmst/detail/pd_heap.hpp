#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "mmst/geometry.hpp"

namespace mmst::detail {

// Candidate-parent structure PD(p): point indices ordered by (exact squared
// distance to the owner, index). Distances never change during a sweep, so
// entries are plain indices compared against the shared point array, kept in
// a flat binary min-heap with a twin heap of lazily erased keys. Four bytes
// per entry keeps the quadratic total in cache, which the sweeps need to hit
// their time bounds.
class PdHeap {
public:
    void bind(const std::vector<ExactPoint>* pts, std::uint32_t owner, std::size_t universe) {
        pts_ = pts;
        owner_ = owner;
        member_.assign((universe + 63) / 64, 0);
        heap_.clear();
        dead_.clear();
    }

    // Bulk load; the previous content is discarded.
    void load(const std::vector<std::uint32_t>& entries) {
        heap_ = entries;
        dead_.clear();
        std::make_heap(heap_.begin(), heap_.end(), greater());
        for (const std::uint32_t v : entries) member_[v >> 6] |= 1ull << (v & 63);
    }

    bool contains(std::uint32_t v) const { return (member_[v >> 6] >> (v & 63)) & 1; }

    std::size_t live_size() const { return heap_.size() - dead_.size(); }

    void insert(std::uint32_t v) {
        assert(!contains(v));
        member_[v >> 6] |= 1ull << (v & 63);
        heap_.push_back(v);
        std::push_heap(heap_.begin(), heap_.end(), greater());
    }

    void erase(std::uint32_t v) {
        assert(contains(v));
        member_[v >> 6] &= ~(1ull << (v & 63));
        dead_.push_back(v);
        std::push_heap(dead_.begin(), dead_.end(), greater());
    }

    // Smallest live entry; the structure must be non-empty.
    std::uint32_t min() {
        settle();
        return heap_.front();
    }

    // Smallest live entry other than skip; requires two live entries when
    // skip is present.
    std::uint32_t min_excluding(std::uint32_t skip) {
        settle();
        if (heap_.front() != skip) return heap_.front();
        std::pop_heap(heap_.begin(), heap_.end(), greater());
        heap_.pop_back();
        settle();
        const std::uint32_t second = heap_.front();
        heap_.push_back(skip);
        std::push_heap(heap_.begin(), heap_.end(), greater());
        return second;
    }

    uint128 key(std::uint32_t v) const { return sq_dist((*pts_)[owner_], (*pts_)[v]); }

private:
    // (distance, index) order; erased copies share their key with any live
    // duplicate, so popping either is equivalent.
    struct Greater {
        const PdHeap* h;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            const uint128 da = h->key(a), db = h->key(b);
            if (da != db) return da > db;
            return a > b;
        }
    };
    Greater greater() const { return Greater{this}; }

    void settle() {
        while (!dead_.empty() && heap_.front() == dead_.front()) {
            std::pop_heap(heap_.begin(), heap_.end(), greater());
            heap_.pop_back();
            std::pop_heap(dead_.begin(), dead_.end(), greater());
            dead_.pop_back();
        }
    }

    const std::vector<ExactPoint>* pts_ = nullptr;
    std::uint32_t owner_ = 0;
    std::vector<std::uint32_t> heap_;
    std::vector<std::uint32_t> dead_;
    std::vector<std::uint64_t> member_;
};

}  // namespace mmst::detail
