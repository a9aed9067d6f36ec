#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "mmst/exact.hpp"

namespace mmst {

// Planar point in the units the caller supplied. Used for costs and output;
// never for order decisions.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Integer coordinates on the common decimal lattice, translated so the root
// sits at the origin. All comparison predicates run on these.
struct ExactPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

enum class Ordering { less, equal, greater };

inline uint128 sq_norm(std::int64_t dx, std::int64_t dy) {
    const int128 x = dx, y = dy;
    return static_cast<uint128>(x * x) + static_cast<uint128>(y * y);
}

inline uint128 sq_dist(const ExactPoint& a, const ExactPoint& b) {
    return sq_norm(a.x - b.x, a.y - b.y);
}

// An undirected direction of monotonicity. Stored as an unnormalized integer
// vector canonicalized into the upper half plane (dy > 0, or dy == 0 and
// dx > 0), so opposite directions map to the same axis and every tie
// predicate is a polynomial sign evaluation.
class Axis {
public:
    Axis() : dx_(0), dy_(1) {}

    // Canonicalizes (dx,dy); throws InvalidInputError on the zero vector.
    static Axis from_direction(std::int64_t dx, std::int64_t dy);

    // Decimal degrees, taken mod 180. Multiples of 45 degrees map to exact
    // directions; anything else goes through floating trig (scaled to
    // integers), which is fine because only critical axes need exactness.
    static Axis from_degrees(const std::string& degrees);
    static Axis from_degrees(double degrees);

    std::int64_t dx() const { return dx_; }
    std::int64_t dy() const { return dy_; }

    // Same axis after flipping the direction vector; canonicalization makes
    // this the identity, which is exactly the Obs-4.2 property tests assert.
    Axis flipped() const { return from_direction(-dx_, -dy_); }

    double slope_radians() const;  // in [0, pi)
    double slope_degrees() const;

    // Equality of slopes, decided exactly.
    friend bool operator==(const Axis& a, const Axis& b) {
        return static_cast<int128>(a.dx_) * b.dy_ == static_cast<int128>(a.dy_) * b.dx_;
    }

private:
    Axis(std::int64_t dx, std::int64_t dy) : dx_(dx), dy_(dy) {}
    std::int64_t dx_, dy_;
};

// Strict slope order on canonical axes, via the cross product sign.
bool slope_less(const Axis& a, const Axis& b);

// Signed projection of p onto the axis direction, in lattice units scaled by
// the (unnormalized) direction length. Exact; comparisons of these values
// against each other or zero are the tie predicates of the sweeps.
inline int128 projection_value(const ExactPoint& p, const Axis& a) {
    return static_cast<int128>(p.x) * a.dx() + static_cast<int128>(p.y) * a.dy();
}

inline Ordering compare_projections(const ExactPoint& p, const ExactPoint& q, const Axis& a) {
    const int128 lhs = static_cast<int128>(p.x - q.x) * a.dx() + static_cast<int128>(p.y - q.y) * a.dy();
    if (lhs < 0) return Ordering::less;
    if (lhs > 0) return Ordering::greater;
    return Ordering::equal;
}

// Signed coordinate of p along the unit direction of a. Floating point: this
// is reporting-only, never an order decision.
double project(const Point& p, const Axis& a);

inline double squared_distance(const Point& p, const Point& q) {
    const double dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

// Orientation sign of the triple (a,b,c): >0 counterclockwise, 0 collinear.
inline int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    const int128 det = static_cast<int128>(b.x - a.x) * (c.y - a.y) -
                       static_cast<int128>(b.y - a.y) * (c.x - a.x);
    return sign128(det);
}

// An ordered pair of perpendicular axes; the y axis slope is folded into
// [0, pi/2) because quarter rotations leave every xy-monotone structure
// unchanged. The x axis is the stored perpendicular (-dy, dx), so the
// perpendicularity invariant holds exactly on the stored vectors.
class OrthoSystem {
public:
    OrthoSystem() : OrthoSystem(Axis::from_direction(1, 0)) {}

    // Folds any direction into the quarter range.
    static OrthoSystem from_direction(std::int64_t dx, std::int64_t dy);
    static OrthoSystem from_degrees(const std::string& degrees);  // mod 90
    static OrthoSystem from_degrees(double degrees);

    const Axis& y_axis() const { return y_; }
    Axis x_axis() const;

    std::int64_t ydx() const { return y_.dx(); }
    std::int64_t ydy() const { return y_.dy(); }

    int128 x_value(const ExactPoint& p) const {
        // projection on the perpendicular (-dy, dx)
        return static_cast<int128>(p.y) * y_.dx() - static_cast<int128>(p.x) * y_.dy();
    }
    int128 y_value(const ExactPoint& p) const { return projection_value(p, y_); }

    double slope_degrees() const { return y_.slope_degrees(); }

    friend bool operator==(const OrthoSystem& a, const OrthoSystem& b) { return a.y_ == b.y_; }

private:
    explicit OrthoSystem(const Axis& y) : y_(y) {}
    Axis y_;  // quarter-canonical: dx > 0, dy >= 0
};

// Strict order of y-axis slopes within the quarter range.
bool slope_less(const OrthoSystem& a, const OrthoSystem& b);

// Direction strictly between the slopes of a and b (b exclusive), used for
// the bisector axes. `b` must have the larger slope. The float midpoint is
// tried first and validated exactly; on failure the exact direction sum is
// used, which always lands strictly inside the open cone.
Axis bisector_between(const Axis& a, const Axis& b);
Axis bisector_toward_pi(const Axis& a);                    // between slope(a) and pi
OrthoSystem bisector_between(const OrthoSystem& a, const OrthoSystem& b);
OrthoSystem bisector_toward_half_pi(const OrthoSystem& a);  // between slope(a) and pi/2

}  // namespace mmst
