#pragma once

#include <optional>
#include <vector>

#include "mmst/graph.hpp"

namespace mmst {

// The interleaved critical axis sequence y_0 .. y_{2m-1}: even entries are
// the perpendiculars of the generating pair lines in sorted slope order, odd
// entries are validated bisectors (the last one bisecting toward pi). Event
// bookkeeping is attached to even entries.
struct CriticalAxes {
    std::vector<Axis> axes;                          // size 2m
    std::vector<std::vector<Edge>> tie_pairs;        // per even axis: non-root pairs
    std::vector<std::optional<std::uint32_t>> root_point;  // per even axis
    std::size_t event_count() const { return tie_pairs.size(); }
};

// Critical axes generated by an explicit set of point pairs. Pairs containing
// the root become root events; the rest become tie pairs of their axis.
CriticalAxes build_critical_axes(const RootedPointSet& ps, const std::vector<Edge>& pairs);

// All-pairs version used by the uniform sweep; requires |P| >= 2.
CriticalAxes critical_axes_detail(const RootedPointSet& ps);
std::vector<Axis> critical_axes(const RootedPointSet& ps);

// Critical axes of a graph: perpendiculars to edges and to root-point lines.
CriticalAxes recognition_axes(const GeometricGraph& g);

// Same construction folded into [0, pi/2) for orthogonal systems. A pair's
// line is parallel to one axis and perpendicular to the other at exactly one
// folded slope, so each pair generates a single even system.
struct CriticalSystems {
    std::vector<OrthoSystem> systems;                // size 2m
    std::vector<std::vector<Edge>> tie_pairs;        // per even system
    std::vector<std::vector<std::uint32_t>> root_points;  // per even system (at most 2)
    std::size_t event_count() const { return tie_pairs.size(); }
};

CriticalSystems build_critical_systems(const RootedPointSet& ps, const std::vector<Edge>& pairs);
CriticalSystems critical_systems_detail(const RootedPointSet& ps);
std::vector<OrthoSystem> critical_systems(const RootedPointSet& ps);
CriticalSystems recognition_systems(const GeometricGraph& g);

// All unordered point pairs of ps.
std::vector<Edge> all_point_pairs(const RootedPointSet& ps);
// Edges of g plus one (root, q) pair per non-root vertex, deduplicated.
std::vector<Edge> graph_event_pairs(const GeometricGraph& g);

}  // namespace mmst
