#include "mmst/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "mmst/errors.hpp"

namespace mmst {
namespace {

// Largest admissible |coordinate| on the common lattice, before root
// translation. Keeps every downstream predicate comfortably inside 128 bits.
constexpr std::int64_t kMaxScaled = std::int64_t{1} << 58;

std::int64_t scaled_value(const Decimal& d, int scale_exp, const std::string& text) {
    int shift = d.exponent10 + scale_exp;
    if (shift < 0) throw InvalidInputError("internal: bad decimal scale for " + text);
    int128 v = d.mantissa;
    for (int i = 0; i < shift; ++i) {
        v *= 10;
        if (abs128(v) > static_cast<uint128>(kMaxScaled))
            throw DegeneracyError("coordinate " + text + " exceeds the exact range after decimal scaling");
    }
    return static_cast<std::int64_t>(v);
}

struct ExactHash {
    std::size_t operator()(const ExactPoint& p) const {
        const std::uint64_t a = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ull;
        const std::uint64_t b = static_cast<std::uint64_t>(p.y) * 0xc2b2ae3d27d4eb4full;
        return static_cast<std::size_t>(a ^ (b >> 1));
    }
};

}  // namespace

RootedPointSet RootedPointSet::from_decimals(const std::vector<std::array<std::string, 2>>& coords,
                                             std::size_t root, const Options& opts) {
    if (coords.empty()) throw InvalidInputError("point set must not be empty");
    if (root >= coords.size()) throw InvalidInputError("root index out of range");

    std::vector<Decimal> parsed;
    parsed.reserve(coords.size() * 2);
    int min_exp = 0;
    for (const auto& c : coords) {
        for (const auto& text : c) {
            const auto d = parse_decimal(text);
            if (!d) throw InvalidInputError("cannot parse coordinate '" + text + "'");
            parsed.push_back(*d);
            min_exp = std::min(min_exp, d->exponent10);
        }
    }
    const int scale_exp = -min_exp;

    RootedPointSet ps;
    ps.root_ = static_cast<std::uint32_t>(root);
    ps.scale_ = std::pow(10.0, scale_exp);
    ps.original_.reserve(coords.size());
    ps.exact_.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        ps.original_.push_back(Point{std::strtod(coords[i][0].c_str(), nullptr),
                                     std::strtod(coords[i][1].c_str(), nullptr)});
        ps.exact_.push_back(ExactPoint{scaled_value(parsed[2 * i], scale_exp, coords[i][0]),
                                       scaled_value(parsed[2 * i + 1], scale_exp, coords[i][1])});
    }
    ps.finalize(opts);
    return ps;
}

RootedPointSet RootedPointSet::from_integers(const std::vector<std::array<std::int64_t, 2>>& coords,
                                             std::size_t root, const Options& opts) {
    if (coords.empty()) throw InvalidInputError("point set must not be empty");
    if (root >= coords.size()) throw InvalidInputError("root index out of range");
    RootedPointSet ps;
    ps.root_ = static_cast<std::uint32_t>(root);
    ps.scale_ = 1.0;
    ps.original_.reserve(coords.size());
    ps.exact_.reserve(coords.size());
    for (const auto& c : coords) {
        if (std::llabs(c[0]) > kMaxScaled || std::llabs(c[1]) > kMaxScaled)
            throw DegeneracyError("integer coordinate exceeds the exact range");
        ps.original_.push_back(Point{static_cast<double>(c[0]), static_cast<double>(c[1])});
        ps.exact_.push_back(ExactPoint{c[0], c[1]});
    }
    ps.finalize(opts);
    return ps;
}

RootedPointSet RootedPointSet::from_doubles(const std::vector<Point>& coords, std::size_t root,
                                            const Options& opts) {
    std::vector<std::array<std::string, 2>> texts;
    texts.reserve(coords.size());
    for (const auto& p : coords) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidInputError("coordinates must be finite");
        texts.push_back({double_to_decimal_string(p.x), double_to_decimal_string(p.y)});
    }
    return from_decimals(texts, root, opts);
}

void RootedPointSet::finalize(const Options& opts) {
    // Translate so the root is the lattice origin.
    const ExactPoint r = exact_[root_];
    for (auto& p : exact_) {
        p.x -= r.x;
        p.y -= r.y;
    }

    std::unordered_set<ExactPoint, ExactHash> seen;
    seen.reserve(exact_.size() * 2);
    for (std::size_t i = 0; i < exact_.size(); ++i) {
        if (!seen.insert(exact_[i]).second)
            throw DegeneracyError("duplicate point at index " + std::to_string(i));
    }

    if (!opts.allow_degenerate) {
        if (const auto bad = validate_general_position(*this, opts.full_check_limit, opts.sample_checks)) {
            throw DegeneracyError("collinear points " + std::to_string((*bad)[0]) + "," +
                                  std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]));
        }
    }
}

double RootedPointSet::distance(std::size_t i, std::size_t j) const {
    return std::sqrt(static_cast<double>(sq_dist(exact_[i], exact_[j]))) / scale_;
}

std::optional<std::array<std::uint32_t, 3>> validate_general_position(const RootedPointSet& ps,
                                                                      std::size_t full_check_limit,
                                                                      std::size_t sample_checks) {
    const std::size_t n = ps.size();
    if (n < 3) return std::nullopt;
    if (n <= full_check_limit) {
        for (std::uint32_t i = 0; i + 2 < n; ++i)
            for (std::uint32_t j = i + 1; j + 1 < n; ++j)
                for (std::uint32_t k = j + 1; k < n; ++k)
                    if (orientation(ps.exact(i), ps.exact(j), ps.exact(k)) == 0)
                        return std::array<std::uint32_t, 3>{i, j, k};
        return std::nullopt;
    }
    // Sampled smoke check on large inputs; deterministic splitmix64 stream.
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(n) << 17);
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    for (std::size_t s = 0; s < sample_checks; ++s) {
        std::uint32_t i = static_cast<std::uint32_t>(next() % n);
        std::uint32_t j = static_cast<std::uint32_t>(next() % n);
        std::uint32_t k = static_cast<std::uint32_t>(next() % n);
        if (i == j || j == k || i == k) continue;
        if (orientation(ps.exact(i), ps.exact(j), ps.exact(k)) == 0) {
            std::array<std::uint32_t, 3> t{i, j, k};
            std::sort(t.begin(), t.end());
            return t;
        }
    }
    return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_collinear_triple(
    const std::vector<std::array<std::int64_t, 2>>& pts) {
    const std::size_t n = pts.size();
    struct Dir {
        std::int64_t dx, dy;
        std::size_t other;
    };
    std::vector<Dir> dirs;
    dirs.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        dirs.clear();
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            std::int64_t dx = pts[b][0] - pts[a][0], dy = pts[b][1] - pts[a][1];
            if (dy < 0 || (dy == 0 && dx < 0)) {
                dx = -dx;
                dy = -dy;
            }
            dirs.push_back({dx, dy, b});
        }
        auto cross = [](const Dir& l, const Dir& r) {
            return static_cast<int128>(l.dx) * r.dy - static_cast<int128>(l.dy) * r.dx;
        };
        std::sort(dirs.begin(), dirs.end(), [&](const Dir& l, const Dir& r) { return cross(l, r) > 0; });
        for (std::size_t i = 0; i + 1 < dirs.size(); ++i)
            if (cross(dirs[i], dirs[i + 1]) == 0)
                return std::array<std::size_t, 3>{a, dirs[i].other, dirs[i + 1].other};
    }
    return std::nullopt;
}

}  // namespace mmst
