#include "mmst/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mmst/errors.hpp"

namespace mmst {
namespace {

using nlohmann::json;

std::string coordinate_string(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number()) return double_to_decimal_string(j.get<double>());
    throw InvalidInputError("coordinate must be a number or a decimal string");
}

PointSetDocument point_set_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInputError("document root must be a JSON object");
    PointSetDocument doc;
    if (!j.contains("points") || !j.at("points").is_array())
        throw InvalidInputError("document needs a 'points' array");
    doc.root = j.value("root", 0u);
    for (const auto& entry : j.at("points")) {
        if (!entry.is_array() || entry.size() != 2)
            throw InvalidInputError("each point must be a [x, y] pair");
        doc.points.push_back({coordinate_string(entry[0]), coordinate_string(entry[1])});
    }
    return doc;
}

json json_from_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("malformed JSON input");
    return j;
}

}  // namespace

RootedPointSet PointSetDocument::to_point_set(const RootedPointSet::Options& opts) const {
    return RootedPointSet::from_decimals(points, root, opts);
}

GeometricGraph GraphDocument::to_graph(const RootedPointSet::Options& opts) const {
    return GeometricGraph(base.to_point_set(opts), edges);
}

PointSetDocument parse_point_set_json(const std::string& text) {
    try {
        return point_set_from_json(json_from_text(text));
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("malformed point set document: ") + e.what());
    }
}

GraphDocument parse_graph_json(const std::string& text) {
    try {
        const json j = json_from_text(text);
        GraphDocument doc;
        doc.base = point_set_from_json(j);
        if (!j.contains("edges") || !j.at("edges").is_array())
            throw InvalidInputError("graph document needs an 'edges' array");
        for (const auto& entry : j.at("edges")) {
            if (!entry.is_array() || entry.size() != 2)
                throw InvalidInputError("each edge must be an [i, j] pair");
            doc.edges.push_back({entry[0].get<std::uint32_t>(), entry[1].get<std::uint32_t>()});
        }
        return doc;
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("malformed graph document: ") + e.what());
    }
}

PointSetDocument parse_point_set_csv(const std::string& text) {
    PointSetDocument doc;
    doc.root = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // trim
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw InvalidInputError("csv line " + std::to_string(line_no) + " has no comma");
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        doc.points.push_back({strip(line.substr(0, comma)), strip(line.substr(comma + 1))});
    }
    if (doc.points.empty()) throw InvalidInputError("csv input has no points");
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

namespace {
bool looks_like_json(const std::string& text) {
    for (const char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}
}  // namespace

PointSetDocument load_point_set(const std::string& path) {
    const std::string text = read_file(path);
    return looks_like_json(text) ? parse_point_set_json(text) : parse_point_set_csv(text);
}

GraphDocument load_graph(const std::string& path) { return parse_graph_json(read_file(path)); }

std::string tree_document_json(const TreeDocument& doc) {
    json j;
    if (doc.axis_slope_degrees) j["axis"] = {{"slope_degrees", *doc.axis_slope_degrees}};
    if (doc.system_y_slope_degrees)
        j["system"] = {{"y_slope_degrees", *doc.system_y_slope_degrees}};
    j["root"] = doc.root;
    json pts = json::array();
    for (const auto& p : doc.points) {
        json pair = json::array();
        pair.push_back(p[0]);
        pair.push_back(p[1]);
        pts.push_back(pair);
    }
    j["points"] = std::move(pts);
    json edges = json::array();
    for (const auto& e : doc.edges) edges.push_back(json::array({e.first, e.second}));
    j["edges"] = std::move(edges);
    j["cost"] = doc.cost;
    return j.dump(2) + "\n";
}

TreeDocument make_tree_document(const RootedTree& tree, const PointSetDocument& source,
                                std::optional<double> axis_degrees,
                                std::optional<double> system_degrees) {
    TreeDocument doc;
    doc.axis_slope_degrees = axis_degrees;
    doc.system_y_slope_degrees = system_degrees;
    doc.root = tree.root();
    doc.points = source.points;
    doc.edges = tree.edges();
    doc.cost = tree.cost();
    return doc;
}

std::string tree_document_svg(const TreeDocument& doc) {
    std::vector<Point> pts;
    pts.reserve(doc.points.size());
    for (const auto& p : doc.points)
        pts.push_back(Point{std::strtod(p[0].c_str(), nullptr), std::strtod(p[1].c_str(), nullptr)});

    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const auto& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double margin = 0.08 * span;
    min_x -= margin;
    min_y -= margin;
    const double width = (max_x + margin) - min_x;
    const double height = (max_y + margin) - min_y;
    const double view = 640.0;
    const double unit = view / std::max(width, height);
    // SVG y grows downward; flip so the picture matches the plane.
    auto sx = [&](double x) { return (x - min_x) * unit; };
    auto sy = [&](double y) { return (height - (y - min_y)) * unit; };

    char buf[256];
    std::string svg;
    auto emit = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof(buf), fmt, args...);
        svg += buf;
    };

    emit("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %.4f %.4f\">\n", width * unit,
         height * unit);
    for (const auto& e : doc.edges) {
        emit("  <line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" stroke=\"#3465a4\" "
             "stroke-width=\"1.5\"/>\n",
             sx(pts[e.first].x), sy(pts[e.first].y), sx(pts[e.second].x), sy(pts[e.second].y));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const bool is_root = i == doc.root;
        emit("  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\" fill=\"%s\"/>\n", sx(pts[i].x),
             sy(pts[i].y), is_root ? 6.0 : 3.5, is_root ? "#cc0000" : "#2e3436");
    }
    // direction arrow anchored at the root
    const double deg = doc.axis_slope_degrees ? *doc.axis_slope_degrees
                                              : doc.system_y_slope_degrees.value_or(90.0);
    const double rad = deg * 3.14159265358979323846 / 180.0;
    const double ax0 = sx(pts[doc.root].x), ay0 = sy(pts[doc.root].y);
    const double len = 0.18 * view;
    const double ax1 = ax0 + len * std::cos(rad), ay1 = ay0 - len * std::sin(rad);
    const double hx = ax1 - ax0, hy = ay1 - ay0;
    const double hn = std::hypot(hx, hy);
    const double ux = hx / hn, uy = hy / hn;
    emit("  <path d=\"M %.4f %.4f L %.4f %.4f\" stroke=\"#4e9a06\" stroke-width=\"2\" "
         "fill=\"none\"/>\n",
         ax0, ay0, ax1, ay1);
    emit("  <path d=\"M %.4f %.4f L %.4f %.4f L %.4f %.4f Z\" fill=\"#4e9a06\"/>\n", ax1, ay1,
         ax1 - 10 * ux - 4 * uy, ay1 - 10 * uy + 4 * ux, ax1 - 10 * ux + 4 * uy,
         ay1 - 10 * uy - 4 * ux);
    svg += "</svg>\n";
    return svg;
}

}  // namespace mmst
