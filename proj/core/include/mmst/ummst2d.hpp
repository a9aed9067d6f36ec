#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mmst/critical.hpp"
#include "mmst/detail/pd_heap.hpp"
#include "mmst/xymmst.hpp"

namespace mmst {

// Rotational sweep over the folded critical system sequence. Unlike the 1D
// sweep there are no ordered sequences to maintain: the state is the
// closed-quadrant membership mask of every point plus one feasible-parent
// tree PD(p) holding (distance, q) for every q whose edge toward p is
// traversable in an x'y'-monotone path to the root. Events re-evaluate the
// dominance predicate only where it can change.
class Ummst2dSweep {
public:
    explicit Ummst2dSweep(const RootedPointSet& ps);

    std::size_t system_count() const { return systems_.systems.size(); }
    std::size_t system_index() const { return index_; }
    const OrthoSystem& system() const { return systems_.systems[index_]; }
    const CriticalSystems& systems() const { return systems_; }

    double cost() const { return cost_; }
    std::size_t min_system_index() const { return min_index_; }
    const OrthoSystem& min_system() const { return systems_.systems[min_index_]; }
    RootedTree tree() const;

    bool advance();

    // Event operations; phase is implied by the current system parity.
    void apply_pair_event(std::uint32_t a, std::uint32_t b);      // dominance re-sync
    void apply_root_event(std::uint32_t q, bool enter);           // quadrant membership change

    struct Stats {
        std::uint64_t pair_syncs = 0;
        std::uint64_t root_enters = 0;
        std::uint64_t root_leaves = 0;
    };
    const Stats& stats() const { return stats_; }

    std::uint8_t mask(std::uint32_t p) const { return mask_[p]; }

private:
    bool dominates(std::uint32_t q, std::uint32_t p) const;  // q feasible parent of p
    void sync_dir(std::uint32_t child, std::uint32_t cand);
    void reparent(std::uint32_t p);

    RootedPointSet ps_;
    CriticalSystems systems_;
    std::size_t index_ = 0;
    std::vector<std::uint8_t> mask_;
    std::vector<detail::PdHeap> pd_;
    std::vector<std::uint32_t> parent_;
    double cost_ = 0.0;
    double min_cost_ = 0.0;
    std::size_t min_index_ = 0;
    Stats stats_;
};

struct Ummst2dResult {
    OrthoSystem system;
    RootedTree tree;
    std::size_t system_index;
};

// Minimum-cost rooted xy-monotone spanning tree over all orthogonal systems;
// O(n^2 log n), rebuilt from scratch at the winning system.
Ummst2dResult ummst2d(const RootedPointSet& ps);

}  // namespace mmst
