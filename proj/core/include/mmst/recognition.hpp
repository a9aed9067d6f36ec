#pragma once

#include <optional>

#include "mmst/critical.hpp"
#include "mmst/graph.hpp"

namespace mmst {

// Fixed-direction recognizers. Both run in O(|E|) after a connectivity check
// and throw DisconnectedGraphError on disconnected inputs.
//
// The reachability route orients each usable edge toward the larger
// |projection| (both ways on ties, dropped across the root line) and tests
// whether the root reaches everything.
bool is_rooted_y_monotone(const GeometricGraph& g, const Axis& a);
// The counting route evaluates the witness sets: B collects points with a
// strictly lower same-side neighbor, C those covered through an equal-
// projection neighbor, with the usual correction when a point projects onto
// the root (it must then be adjacent to the root).
bool is_rooted_y_monotone_counting(const GeometricGraph& g, const Axis& a);

bool is_rooted_xy_monotone(const GeometricGraph& g, const OrthoSystem& sys);
bool is_rooted_xy_monotone_counting(const GeometricGraph& g, const OrthoSystem& sys);

// Sweep recognizers over the graph's critical directions: maintain the
// witness sets incrementally and report the first direction that passes, or
// nullopt when none does. O(|E| log |P|).
std::optional<Axis> uniform_monotone_axis(const GeometricGraph& g);
std::optional<OrthoSystem> uniform_2d_monotone_system(const GeometricGraph& g);

}  // namespace mmst
