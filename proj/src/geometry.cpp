#include "dibm/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <numbers>

namespace dibm {

double diameter(const Triangle& t)
{
    return std::max({distance(t[0], t[1]), distance(t[1], t[2]), distance(t[2], t[0])});
}

double min_angle_deg(const Triangle& t)
{
    double smallest = 180.0;
    for (int i = 0; i < 3; ++i) {
        const Point2 a = t[(i + 1) % 3] - t[i];
        const Point2 b = t[(i + 2) % 3] - t[i];
        const double angle = std::atan2(std::abs(cross(a, b)), dot(a, b));
        smallest = std::min(smallest, angle * 180.0 / std::numbers::pi);
    }
    return smallest;
}

ImplicitDomain circle_domain(Point2 center, double radius)
{
    if (!(radius > 0.0))
        throw std::invalid_argument("circle_domain: radius must be positive");
    ImplicitDomain dom;
    dom.signed_distance = [center, radius](const Point2& p) { return distance(p, center) - radius; };
    dom.circle = Circle{center, radius};
    return dom;
}

ImplicitDomain level_set_domain(std::function<double(const Point2&)> phi)
{
    ImplicitDomain dom;
    dom.signed_distance = std::move(phi);
    return dom;
}

double circle_signed_distance(Point2 p) { return norm(p) - 1.0; }

namespace {

double point_segment_distance(Point2 p, Point2 a, Point2 b)
{
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    const double s = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + s * ab);
}

bool contains(const Triangle& t, Point2 p)
{
    const double d0 = cross(t[1] - t[0], p - t[0]);
    const double d1 = cross(t[2] - t[1], p - t[1]);
    const double d2 = cross(t[0] - t[2], p - t[2]);
    const bool has_neg = d0 < 0 || d1 < 0 || d2 < 0;
    const bool has_pos = d0 > 0 || d1 > 0 || d2 > 0;
    return !(has_neg && has_pos);
}

void require_nondegenerate(const Triangle& tri)
{
    const double scale = diameter(tri);
    if (!(std::abs(signed_area(tri)) > 1e-14 * scale * scale))
        throw std::invalid_argument("degenerate element");
}

} // namespace

DistanceRange abs_distance_range(const Triangle& tri, const ImplicitDomain& dom)
{
    require_nondegenerate(tri);

    if (dom.circle) {
        const auto& [c, radius] = *dom.circle;
        double r_max = 0.0;
        for (const auto& v : tri)
            r_max = std::max(r_max, distance(v, c));
        double r_min = 0.0;
        if (!contains(tri, c)) {
            r_min = std::min({point_segment_distance(c, tri[0], tri[1]),
                              point_segment_distance(c, tri[1], tri[2]),
                              point_segment_distance(c, tri[2], tri[0])});
        }
        const double a = std::abs(r_min - radius);
        const double b = std::abs(r_max - radius);
        if (r_min <= radius && radius <= r_max)
            return {0.0, std::max(a, b)};
        return {std::min(a, b), std::max(a, b)};
    }

    // Approximate: |d| is 1-Lipschitz for a distance function, so widen the
    // vertex samples by the diameter.
    const double diam = diameter(tri);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool has_neg = false;
    bool has_pos = false;
    for (const auto& v : tri) {
        const double d = dom(v);
        has_neg |= d <= 0.0;
        has_pos |= d >= 0.0;
        lo = std::min(lo, std::abs(d));
        hi = std::max(hi, std::abs(d));
    }
    if (has_neg && has_pos)
        return {0.0, hi + diam};
    return {std::max(0.0, lo - diam), hi + diam};
}

bool triangle_tube_overlap(const Triangle& tri, const ImplicitDomain& dom, double eps)
{
    if (eps < 0.0)
        throw std::invalid_argument("triangle_tube_overlap: eps must be non-negative");
    return abs_distance_range(tri, dom).lo <= eps;
}

namespace {

QuadratureRule make_degree1() { return {1, {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}}, {1.0}}; }

QuadratureRule make_degree2()
{
    const double a = 1.0 / 6.0;
    const double b = 2.0 / 3.0;
    return {2, {{b, a, a}, {a, b, a}, {a, a, b}}, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
}

// Six-point rule with two orbits of the form (1 - 2s, s, s); nodes and
// weights in closed form.
QuadratureRule make_degree4()
{
    const double sq10 = std::sqrt(10.0);
    const double root = std::sqrt(38.0 - 44.0 * std::sqrt(0.4));
    const double s1 = (8.0 - sq10 + root) / 18.0;
    const double s2 = (8.0 - sq10 - root) / 18.0;
    const double wroot = std::sqrt(213125.0 - 53320.0 * sq10);
    const double w1 = (620.0 + wroot) / 3720.0;
    const double w2 = (620.0 - wroot) / 3720.0;

    QuadratureRule rule;
    rule.degree = 4;
    for (auto [s, w] : {std::pair{s1, w1}, std::pair{s2, w2}}) {
        const double r = 1.0 - 2.0 * s;
        rule.points.push_back({r, s, s});
        rule.points.push_back({s, r, s});
        rule.points.push_back({s, s, r});
        rule.weights.insert(rule.weights.end(), 3, w);
    }
    return rule;
}

} // namespace

const QuadratureRule& quadrature(int degree)
{
    static const QuadratureRule d1 = make_degree1();
    static const QuadratureRule d2 = make_degree2();
    static const QuadratureRule d4 = make_degree4();
    switch (degree) {
    case 1: return d1;
    case 2: return d2;
    case 4: return d4;
    default: throw std::invalid_argument("quadrature: unsupported degree " + std::to_string(degree));
    }
}

} // namespace dibm
