#pragma once

#include <vector>

#include "mmst/graph.hpp"

namespace mmst {

// How a non-root point with projection exactly zero is treated. The public
// entry points reject it; the sweep evaluates critical axes with the point a
// member of both closed halves, which is what the split lemma prescribes.
enum class BoundaryRule { reject, both_sides };

// Minimum-cost rooted spanning tree in which every root-to-point path is
// monotone along axis a. Splits at the root line and solves each closed half
// with one insert-only nearest-neighbor structure; O(n log^2 n).
// Rejects inputs where a non-root point projects exactly onto the root.
RootedTree ymmst(const RootedPointSet& ps, const Axis& a);

// One-half variant: requires every non-root point strictly on one side.
RootedTree ymmst_one_side(const RootedPointSet& ps, const Axis& a);

namespace detail {

struct YmmstHalves {
    RootedTree tree;
    std::vector<std::uint32_t> seq_minus;  // S[P_{y'<=0}, y'], root first
    std::vector<std::uint32_t> seq_plus;   // S[P_{y'>=0}, y'], root first
};

YmmstHalves ymmst_with_sequences(const RootedPointSet& ps, const Axis& a, BoundaryRule rule);

}  // namespace detail
}  // namespace mmst
