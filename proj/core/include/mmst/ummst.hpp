#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mmst/critical.hpp"
#include "mmst/detail/pd_heap.hpp"
#include "mmst/ymmst.hpp"

namespace mmst {

// Rotational sweep over the critical axis sequence. The state holds the
// current tree (as parent pointers), the two half sequences, and one
// distance-keyed candidate-parent tree PD(p) per non-root point whose minimum
// entry is p's parent. advance() moves to the next axis by applying the
// axis's events; every state can be compared against a from-scratch
// construction, which is what the state-invariant tests do.
class UmmstSweep {
public:
    explicit UmmstSweep(const RootedPointSet& ps);

    std::size_t axis_count() const { return axes_.axes.size(); }
    std::size_t axis_index() const { return index_; }
    const Axis& axis() const { return axes_.axes[index_]; }
    const CriticalAxes& axes() const { return axes_; }

    double cost() const { return cost_; }
    std::size_t min_axis_index() const { return min_index_; }
    const Axis& min_axis() const { return axes_.axes[min_index_]; }
    RootedTree tree() const;  // materializes the current parents

    bool advance();  // false once the last axis has been processed

    // Event operations. Preconditions are enforced; violating them means the
    // sweep bookkeeping is broken and raises InvalidInputError.
    void apply_swap_event(std::uint32_t a, std::uint32_t b);     // tie pair at an even axis
    void apply_order_restore(std::uint32_t a, std::uint32_t b);  // same pair at the next odd axis
    void apply_root_event(std::uint32_t q);                      // q joins the opposite half
    void leave_root_event(std::uint32_t q);                      // q leaves its old half

    struct Stats {
        std::uint64_t even_pair_checks = 0;
        std::uint64_t odd_pair_checks = 0;
        std::uint64_t even_swaps = 0;
        std::uint64_t odd_swaps = 0;
        std::uint64_t root_enters = 0;
        std::uint64_t root_leaves = 0;
    };
    const Stats& stats() const { return stats_; }

    // Half sequences, root first; minus is the closed non-positive side.
    const std::vector<std::uint32_t>& seq_minus() const { return seq_[0]; }
    const std::vector<std::uint32_t>& seq_plus() const { return seq_[1]; }

private:
    static constexpr std::uint32_t kAbsent = 0xffffffffu;

    void reparent(std::uint32_t p);
    void do_swap(int half, std::uint32_t front, std::uint32_t rear);
    int locate_pair(std::uint32_t a, std::uint32_t b, std::uint32_t& front,
                    std::uint32_t& rear) const;

    RootedPointSet ps_;
    CriticalAxes axes_;
    std::size_t index_ = 0;
    std::array<std::vector<std::uint32_t>, 2> seq_;   // 0 = minus, 1 = plus
    std::array<std::vector<std::uint32_t>, 2> pos_;   // position per point, kAbsent if out
    std::vector<detail::PdHeap> pd_;
    std::vector<std::uint32_t> parent_;
    std::vector<Edge> scratch_pairs_;
    double cost_ = 0.0;
    double min_cost_ = 0.0;
    std::size_t min_index_ = 0;
    Stats stats_;
};

struct UmmstResult {
    Axis axis;
    RootedTree tree;
    std::size_t axis_index;
};

// Minimum-cost rooted monotone spanning tree over all directions: full sweep,
// then a from-scratch rebuild at the winning axis. O(n^2 log n).
UmmstResult ummst(const RootedPointSet& ps);

}  // namespace mmst
