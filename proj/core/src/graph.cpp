#include "mmst/graph.hpp"

#include <algorithm>
#include <string>

#include "mmst/errors.hpp"

namespace mmst {

GeometricGraph::GeometricGraph(RootedPointSet points, std::vector<Edge> edges)
    : points_(std::move(points)), edges_(std::move(edges)) {
    const std::size_t n = points_.size();
    for (auto& e : edges_) {
        if (e.first == e.second)
            throw InvalidInputError("self loop at vertex " + std::to_string(e.first));
        if (e.first >= n || e.second >= n)
            throw InvalidInputError("edge endpoint out of range");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidInputError("duplicate edge");
    adj_.assign(n, {});
    for (const auto& e : edges_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
}

bool GeometricGraph::connected() const {
    const std::size_t n = points_.size();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{points_.root()};
    seen[points_.root()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

bool GeometricGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

double graph_cost(const GeometricGraph& g) {
    double total = 0.0;
    for (const auto& e : g.edges()) total += g.points().distance(e.first, e.second);
    return total;
}

RootedTree::RootedTree(RootedPointSet points, std::vector<std::uint32_t> parent)
    : points_(std::move(points)), parent_(std::move(parent)) {
    const std::size_t n = points_.size();
    const std::uint32_t r = points_.root();
    if (parent_.size() != n) throw InvalidInputError("parent map size mismatch");
    if (parent_[r] != r) throw InvalidInputError("root must be its own parent");
    // Acyclicity: walk each vertex to the root, bounded by n steps.
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t cur = v;
        std::size_t steps = 0;
        while (cur != r) {
            if (parent_[cur] >= n) throw InvalidInputError("parent index out of range");
            cur = parent_[cur];
            if (++steps > n) throw InvalidInputError("parent links contain a cycle");
        }
    }
    for (std::uint32_t v = 0; v < n; ++v)
        if (v != r) cost_ += points_.distance(v, parent_[v]);
}

std::vector<Edge> RootedTree::edges() const {
    std::vector<Edge> out;
    out.reserve(points_.size() - 1);
    for (std::uint32_t v = 0; v < points_.size(); ++v) {
        if (v == root()) continue;
        const std::uint32_t p = parent_[v];
        out.emplace_back(std::min(v, p), std::max(v, p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GeometricGraph RootedTree::to_graph() const { return GeometricGraph(points_, edges()); }

}  // namespace mmst
