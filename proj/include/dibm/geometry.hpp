#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dibm {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2() = default;
    Point2(double x_, double y_) : x(x_), y(y_)
    {
        if (!std::isfinite(x_) || !std::isfinite(y_))
            throw std::invalid_argument("Point2: non-finite coordinate");
    }
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

using Triangle = std::array<Point2, 3>;

/// Signed area, positive for counterclockwise vertex order.
inline double signed_area(const Triangle& t) { return 0.5 * cross(t[1] - t[0], t[2] - t[0]); }

inline Point2 barycenter(const Triangle& t)
{
    return {(t[0].x + t[1].x + t[2].x) / 3.0, (t[0].y + t[1].y + t[2].y) / 3.0};
}

/// Longest edge length.
double diameter(const Triangle& t);

/// Smallest interior angle in degrees.
double min_angle_deg(const Triangle& t);

struct Circle {
    Point2 center;
    double radius = 1.0;
};

/// Implicit description of the embedded domain D: negative inside, zero on the
/// interface, positive outside. `circle` is set when the signed distance is the
/// exact Euclidean one, which enables exact per-triangle distance ranges.
struct ImplicitDomain {
    std::function<double(const Point2&)> signed_distance;
    std::optional<Circle> circle;

    [[nodiscard]] bool is_exact() const { return circle.has_value(); }
    double operator()(const Point2& p) const { return signed_distance(p); }
};

ImplicitDomain circle_domain(Point2 center = {0.0, 0.0}, double radius = 1.0);
ImplicitDomain level_set_domain(std::function<double(const Point2&)> phi);

/// Signed distance to the unit circle centered at the origin.
double circle_signed_distance(Point2 p);

/// Closed interval [lo, hi] of |signed_distance| over a triangle.
struct DistanceRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Exact for circle domains. Otherwise a conservative enclosure from vertex
/// samples widened by the triangle diameter (approximate).
DistanceRange abs_distance_range(const Triangle& tri, const ImplicitDomain& dom);

/// Whether the triangle meets the closed tube {|d| <= eps}.
bool triangle_tube_overlap(const Triangle& tri, const ImplicitDomain& dom, double eps);

struct QuadratureRule {
    int degree = 0;
    std::vector<std::array<double, 3>> points; // barycentric
    std::vector<double> weights;               // relative to triangle area, sum to 1

    [[nodiscard]] std::size_t size() const { return points.size(); }
};

/// Symmetric triangle rules exact up to `degree`: 1 (centroid), 2 (3 points),
/// 4 (6 points). Other degrees throw.
const QuadratureRule& quadrature(int degree);

inline Point2 from_barycentric(const Triangle& t, const std::array<double, 3>& l)
{
    return {l[0] * t[0].x + l[1] * t[1].x + l[2] * t[2].x,
            l[0] * t[0].y + l[1] * t[1].y + l[2] * t[2].y};
}

/// Integral of f over the triangle with the given rule.
template <class F>
double integrate(const Triangle& t, const QuadratureRule& rule, F&& f)
{
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q)
        sum += rule.weights[q] * f(from_barycentric(t, rule.points[q]));
    return std::abs(signed_area(t)) * sum;
}

} // namespace dibm
