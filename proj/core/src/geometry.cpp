#include "mmst/geometry.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "mmst/errors.hpp"

namespace mmst {
namespace {

// Scale used when a direction has to come from floating trig (user axes and
// bisector candidates). Large enough for any practical angular resolution,
// small enough that every downstream product stays far inside 128 bits.
constexpr double kTrigScale = 1099511627776.0;  // 2^40

struct RawDir {
    std::int64_t x, y;
};

RawDir canonical_half(std::int64_t dx, std::int64_t dy) {
    if (dx == 0 && dy == 0) throw InvalidInputError("axis direction must be non-zero");
    if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

RawDir canonical_quarter(std::int64_t dx, std::int64_t dy) {
    RawDir d = canonical_half(dx, dy);
    if (d.x <= 0) {  // slope in [pi/2, pi): rotate by -pi/2
        const std::int64_t nx = d.y, ny = -d.x;
        d = {nx, ny};
    }
    return d;
}

int128 cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
    return static_cast<int128>(ax) * by - static_cast<int128>(ay) * bx;
}

RawDir direction_from_angle(double radians) {
    const auto x = static_cast<std::int64_t>(std::llround(std::cos(radians) * kTrigScale));
    const auto y = static_cast<std::int64_t>(std::llround(std::sin(radians) * kTrigScale));
    return {x, y};
}

// Degrees handled exactly when the value is a multiple of 45; those are the
// only rational-degree angles with a rational direction anyway.
std::optional<RawDir> exact_dir_for_degrees(const Decimal& deg) {
    // multiple of 45 degrees <=> mantissa * 10^e / 45 integral
    int128 m = deg.mantissa;
    int e = deg.exponent10;
    while (e < 0 && m % 10 == 0) {
        m /= 10;
        ++e;
    }
    if (e < 0) return std::nullopt;
    for (int i = 0; i < e; ++i) {
        if (abs128(m) > (static_cast<uint128>(1) << 110)) return std::nullopt;
        m *= 10;
    }
    if (m % 45 != 0) return std::nullopt;
    int k = static_cast<int>(((m / 45) % 8 + 8) % 8);  // octant index
    switch (k % 4) {
        case 0: return RawDir{1, 0};
        case 1: return RawDir{1, 1};
        case 2: return RawDir{0, 1};
        default: return RawDir{-1, 1};
    }
}

}  // namespace

Axis Axis::from_direction(std::int64_t dx, std::int64_t dy) {
    const RawDir d = canonical_half(dx, dy);
    return Axis(d.x, d.y);
}

Axis Axis::from_degrees(const std::string& degrees) {
    const auto dec = parse_decimal(degrees);
    if (!dec) throw InvalidInputError("cannot parse direction degrees: " + degrees);
    if (const auto dir = exact_dir_for_degrees(*dec)) return from_direction(dir->x, dir->y);
    const double value = std::strtod(degrees.c_str(), nullptr);
    return from_degrees(value);
}

Axis Axis::from_degrees(double degrees) {
    double deg = std::fmod(degrees, 180.0);
    if (deg < 0) deg += 180.0;
    const RawDir d = direction_from_angle(deg * std::numbers::pi / 180.0);
    return from_direction(d.x, d.y);
}

double Axis::slope_radians() const {
    const double a = std::atan2(static_cast<double>(dy_), static_cast<double>(dx_));
    return a < 0 ? a + std::numbers::pi : a;
}

double Axis::slope_degrees() const { return slope_radians() * 180.0 / std::numbers::pi; }

bool slope_less(const Axis& a, const Axis& b) {
    return cross(a.dx(), a.dy(), b.dx(), b.dy()) > 0;
}

double project(const Point& p, const Axis& a) {
    const double dx = static_cast<double>(a.dx());
    const double dy = static_cast<double>(a.dy());
    return (p.x * dx + p.y * dy) / std::hypot(dx, dy);
}

OrthoSystem OrthoSystem::from_direction(std::int64_t dx, std::int64_t dy) {
    const RawDir d = canonical_quarter(dx, dy);
    return OrthoSystem(Axis::from_direction(d.x, d.y));
}

OrthoSystem OrthoSystem::from_degrees(const std::string& degrees) {
    const auto dec = parse_decimal(degrees);
    if (!dec) throw InvalidInputError("cannot parse direction degrees: " + degrees);
    if (const auto dir = exact_dir_for_degrees(*dec)) return from_direction(dir->x, dir->y);
    return from_degrees(std::strtod(degrees.c_str(), nullptr));
}

OrthoSystem OrthoSystem::from_degrees(double degrees) {
    double deg = std::fmod(degrees, 90.0);
    if (deg < 0) deg += 90.0;
    const RawDir d = direction_from_angle(deg * std::numbers::pi / 180.0);
    return from_direction(d.x, d.y);
}

Axis OrthoSystem::x_axis() const { return Axis::from_direction(-y_.dy(), y_.dx()); }

bool slope_less(const OrthoSystem& a, const OrthoSystem& b) {
    return slope_less(a.y_axis(), b.y_axis());
}

namespace {

// Strictly-inside check for a candidate direction against the cone from `a`
// to `b` (as raw vectors, CCW angle < pi between them).
bool strictly_between(const RawDir& a, const RawDir& cand, const RawDir& b) {
    return cross(a.x, a.y, cand.x, cand.y) > 0 && cross(cand.x, cand.y, b.x, b.y) > 0;
}

RawDir bisect_cone(const RawDir& a, double angle_a, const RawDir& b, double angle_b) {
    const RawDir mid = direction_from_angle((angle_a + angle_b) / 2.0);
    if ((mid.x != 0 || mid.y != 0) && strictly_between(a, mid, b)) return mid;
    // Exact fallback: the vector sum of two independent directions whose CCW
    // angle is below pi lies strictly inside the open cone.
    const RawDir sum{a.x + b.x, a.y + b.y};
    assert(strictly_between(a, sum, b));
    return sum;
}

}  // namespace

Axis bisector_between(const Axis& lo, const Axis& hi) {
    if (!slope_less(lo, hi)) throw InvalidInputError("bisector_between requires lo < hi");
    const RawDir a{lo.dx(), lo.dy()}, b{hi.dx(), hi.dy()};
    const RawDir d = bisect_cone(a, lo.slope_radians(), b, hi.slope_radians());
    return Axis::from_direction(d.x, d.y);
}

Axis bisector_toward_pi(const Axis& lo) {
    if (lo.dy() == 0) return Axis::from_direction(0, 1);  // lone slope 0: bisector is pi/2
    const RawDir a{lo.dx(), lo.dy()}, b{-1, 0};
    const RawDir d = bisect_cone(a, lo.slope_radians(), b, std::numbers::pi);
    return Axis::from_direction(d.x, d.y);
}

OrthoSystem bisector_between(const OrthoSystem& lo, const OrthoSystem& hi) {
    if (!slope_less(lo, hi)) throw InvalidInputError("bisector_between requires lo < hi");
    const RawDir a{lo.ydx(), lo.ydy()}, b{hi.ydx(), hi.ydy()};
    const RawDir d = bisect_cone(a, lo.y_axis().slope_radians(), b, hi.y_axis().slope_radians());
    return OrthoSystem::from_direction(d.x, d.y);
}

OrthoSystem bisector_toward_half_pi(const OrthoSystem& lo) {
    const RawDir a{lo.ydx(), lo.ydy()}, b{0, 1};
    const RawDir d = bisect_cone(a, lo.y_axis().slope_radians(), b, std::numbers::pi / 2.0);
    return OrthoSystem::from_direction(d.x, d.y);
}

}  // namespace mmst
