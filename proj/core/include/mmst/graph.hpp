#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mmst/point_set.hpp"

namespace mmst {

using Edge = std::pair<std::uint32_t, std::uint32_t>;  // normalized first < second

// Undirected geometric graph over a rooted point set.
class GeometricGraph {
public:
    GeometricGraph(RootedPointSet points, std::vector<Edge> edges);

    const RootedPointSet& points() const { return points_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::uint32_t>& adjacent(std::uint32_t v) const { return adj_[v]; }
    std::size_t size() const { return points_.size(); }
    std::uint32_t root() const { return points_.root(); }

    bool connected() const;
    bool has_edge(std::uint32_t a, std::uint32_t b) const;

private:
    RootedPointSet points_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

double graph_cost(const GeometricGraph& g);

// Rooted spanning tree stored as a parent map; parent(root) == root.
class RootedTree {
public:
    RootedTree(RootedPointSet points, std::vector<std::uint32_t> parent);

    const RootedPointSet& points() const { return points_; }
    std::uint32_t parent(std::uint32_t v) const { return parent_[v]; }
    const std::vector<std::uint32_t>& parents() const { return parent_; }
    std::size_t size() const { return points_.size(); }
    std::uint32_t root() const { return points_.root(); }
    double cost() const { return cost_; }

    std::vector<Edge> edges() const;  // normalized and sorted
    GeometricGraph to_graph() const;

private:
    RootedPointSet points_;
    std::vector<std::uint32_t> parent_;
    double cost_ = 0.0;
};

}  // namespace mmst
