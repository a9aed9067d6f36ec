#pragma once

#include <cstdint>
#include <vector>

#include "mmst/critical.hpp"
#include "mmst/graph.hpp"

// Brute-force reference implementations used by tests and example derivation.
// They share nothing with the optimized modules beyond the core geometry
// predicates, and they apply the same (distance, index) tie rule so edge sets
// compare exactly.
namespace mmst::oracle {

// O(n^2) parent rule per closed half plane. Points on the splitting line are
// members of both halves (their parent is the root in either), which is the
// definition the sweep relies on at critical axes perpendicular to a
// root-point line.
RootedTree brute_parent_ymmst(const RootedPointSet& ps, const Axis& a);

// O(n^2) filtered parent rule per closed quadrant.
RootedTree brute_xymmst(const RootedPointSet& ps, const OrthoSystem& sys);
// Single-quadrant variant; requires all non-root points strictly inside one
// quadrant of sys.
RootedTree brute_xymmst_quadrant(const RootedPointSet& ps, const OrthoSystem& sys);

struct BruteUniform {
    Axis axis;
    RootedTree tree;
    std::size_t axis_index;  // into critical_axes(ps)
};
// Exhaustive minimum over the critical axis set; documented bound n <= 64.
BruteUniform brute_ummst(const RootedPointSet& ps);

struct BruteUniform2d {
    OrthoSystem system;
    RootedTree tree;
    std::size_t system_index;
};
BruteUniform2d brute_ummst2d(const RootedPointSet& ps);

// Exhaustive search over simple paths from the root; |P| <= 12.
bool monotone_path_exists(const GeometricGraph& g, const Axis& a, std::uint32_t target);
bool monotone_path_exists(const GeometricGraph& g, const OrthoSystem& sys, std::uint32_t target);

// True when every vertex is reachable by a monotone path.
bool all_monotone_reachable(const GeometricGraph& g, const Axis& a);
bool all_monotone_reachable(const GeometricGraph& g, const OrthoSystem& sys);

}  // namespace mmst::oracle
