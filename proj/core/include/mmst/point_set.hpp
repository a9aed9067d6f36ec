#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmst/geometry.hpp"

namespace mmst {

// Planar points with a designated root. Coordinates are ingested as decimals,
// put on a common power-of-ten lattice and translated so the root is the
// integer origin; every order decision downstream runs on those integers and
// is therefore exact. The as-given coordinates are kept for costs and output.
struct PointSetOptions {
    // Full O(n^3) collinearity check up to this size, random sampling above.
    std::size_t full_check_limit = 256;
    std::size_t sample_checks = 4096;
    // Downgrades collinear triples from errors to acceptance; duplicates are
    // always rejected.
    bool allow_degenerate = false;
};

class RootedPointSet {
public:
    using Options = PointSetOptions;

    static RootedPointSet from_decimals(const std::vector<std::array<std::string, 2>>& coords,
                                        std::size_t root, const Options& opts = Options());
    static RootedPointSet from_integers(const std::vector<std::array<std::int64_t, 2>>& coords,
                                        std::size_t root, const Options& opts = Options());
    // Doubles are re-read through their shortest round-trip decimal form.
    static RootedPointSet from_doubles(const std::vector<Point>& coords, std::size_t root,
                                       const Options& opts = Options());

    std::size_t size() const { return original_.size(); }
    std::uint32_t root() const { return root_; }

    const Point& original(std::size_t i) const { return original_[i]; }
    const std::vector<Point>& originals() const { return original_; }
    const ExactPoint& exact(std::size_t i) const { return exact_[i]; }
    const std::vector<ExactPoint>& exacts() const { return exact_; }

    // exact = (original - original(root)) * scale, with scale a power of ten.
    double scale() const { return scale_; }

    // Euclidean distance between points i and j, in original units. Derived
    // from the exact lattice so that equal exact distances produce identical
    // doubles no matter which module computes them.
    double distance(std::size_t i, std::size_t j) const;

private:
    RootedPointSet() = default;
    void finalize(const Options& opts);

    std::vector<Point> original_;
    std::vector<ExactPoint> exact_;
    std::uint32_t root_ = 0;
    double scale_ = 1.0;
};

// Exact orientation test over point triples; returns the first collinear
// triple in lexicographic index order, or nullopt when none exists. Runs all
// triples when n <= full_check_limit and a deterministic random sample above.
std::optional<std::array<std::uint32_t, 3>> validate_general_position(
    const RootedPointSet& ps, std::size_t full_check_limit = 256, std::size_t sample_checks = 4096);

// Exhaustive collinearity scan over raw coordinates via per-anchor direction
// sorting; O(n^2 log n), usable before ingestion. Returns some collinear
// triple or nullopt.
std::optional<std::array<std::size_t, 3>> find_collinear_triple(
    const std::vector<std::array<std::int64_t, 2>>& pts);

}  // namespace mmst
