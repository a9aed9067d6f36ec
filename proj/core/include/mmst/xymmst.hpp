#pragma once

#include "mmst/graph.hpp"
#include "mmst/ymmst.hpp"

namespace mmst {

// Minimum-cost rooted spanning tree whose root-to-point paths are monotone in
// both axes of sys. Decomposes into the four quadrants and solves each with a
// range-filtered nearest-neighbor structure keyed on |x'|; O(n log^3 n).
// Rejects inputs where a non-root point lies on either axis of sys; the sweep
// uses the closed-quadrant rule instead.
RootedTree xymmst(const RootedPointSet& ps, const OrthoSystem& sys);

// Single-quadrant variant: all non-root points strictly inside one quadrant.
RootedTree xymmst_quadrant(const RootedPointSet& ps, const OrthoSystem& sys);

namespace detail {
RootedTree xymmst_impl(const RootedPointSet& ps, const OrthoSystem& sys, BoundaryRule rule);

// Closed-quadrant membership bits: bit0 (+,+), bit1 (-,+), bit2 (-,-),
// bit3 (+,-). Zero signs widen the mask.
std::uint8_t quadrant_mask(int sx, int sy);
}  // namespace detail

}  // namespace mmst
