#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mmst/graph.hpp"

namespace mmst {

// On-disk document shapes. Coordinates are carried as decimal strings so a
// round trip through files loses nothing; JSON numbers are accepted and read
// back through their shortest round-trip decimal form.
struct PointSetDocument {
    std::uint32_t root = 0;
    std::vector<std::array<std::string, 2>> points;

    RootedPointSet to_point_set(const RootedPointSet::Options& opts = RootedPointSet::Options()) const;
};

struct GraphDocument {
    PointSetDocument base;
    std::vector<Edge> edges;

    GeometricGraph to_graph(const RootedPointSet::Options& opts = RootedPointSet::Options()) const;
};

struct TreeDocument {
    // exactly one of the two is set, depending on the variant
    std::optional<double> axis_slope_degrees;
    std::optional<double> system_y_slope_degrees;
    std::uint32_t root = 0;
    std::vector<std::array<std::string, 2>> points;  // original-coordinate echo
    std::vector<Edge> edges;
    double cost = 0.0;
};

PointSetDocument parse_point_set_json(const std::string& text);
GraphDocument parse_graph_json(const std::string& text);
// One "x,y" pair per line; the first line is the root.
PointSetDocument parse_point_set_csv(const std::string& text);

// Dispatches on content: CSV unless the first non-space byte is '{'.
PointSetDocument load_point_set(const std::string& path);
GraphDocument load_graph(const std::string& path);

std::string tree_document_json(const TreeDocument& doc);
TreeDocument make_tree_document(const RootedTree& tree, const PointSetDocument& source,
                                std::optional<double> axis_degrees,
                                std::optional<double> system_degrees);

// SVG 1.1: one circle per point, one line per edge, a two-path arrow for the
// monotonicity direction. Byte-deterministic for fixed input.
std::string tree_document_svg(const TreeDocument& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mmst
