#pragma once

#include <cstdint>

#include "mmst/point_set.hpp"

// Deterministic instance generators for the bench command and the complexity
// smoke tests. All randomness is splitmix64, so a fixed seed reproduces the
// same instance on any platform.
namespace mmst::instances {

struct Params {
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::int64_t coord_range = 100000000;
    // Keep every coordinate off both axes of the standard system.
    bool avoid_axes = false;
    // Exhaustively certify general position (O(n^2 log n) per attempt); meant
    // for sweep inputs, which are quadratic anyway.
    bool certify_general_position = false;
};

RootedPointSet make(const Params& params);

}  // namespace mmst::instances
