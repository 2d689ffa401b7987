#include "dibm/cases.hpp"

#include <cmath>

namespace dibm {

namespace {

double poly(const Point2& p) { return (4.0 - p.x * p.x) * (4.0 - p.y * p.y); }

Point2 poly_grad(const Point2& p) { return {-2.0 * p.x * (4.0 - p.y * p.y), -2.0 * p.y * (4.0 - p.x * p.x)}; }

double poly_laplacian(const Point2& p) { return -2.0 * (4.0 - p.y * p.y) - 2.0 * (4.0 - p.x * p.x); }

double radius2(const Point2& p) { return p.x * p.x + p.y * p.y; }

// u = P exp(1 - r^2)
double inner_u(const Point2& p) { return poly(p) * std::exp(1.0 - radius2(p)); }

Point2 inner_grad(const Point2& p)
{
    const double e = std::exp(1.0 - radius2(p));
    const double pv = poly(p);
    const Point2 g = poly_grad(p);
    return {e * (g.x - 2.0 * p.x * pv), e * (g.y - 2.0 * p.y * pv)};
}

double inner_laplacian(const Point2& p)
{
    const double r2 = radius2(p);
    const double e = std::exp(1.0 - r2);
    const Point2 g = poly_grad(p);
    return e * (poly_laplacian(p) - 4.0 * (p.x * g.x + p.y * g.y) + 4.0 * poly(p) * (r2 - 1.0));
}

} // namespace

AnalyticCase circle_interface_case(OuterCondition outer)
{
    AnalyticCase c;
    c.name = "circle_interface";
    c.domain = circle_domain();
    const auto inside = [dom = c.domain](const Point2& p) { return dom(p) <= 0.0; };

    c.exact_u = [inside](const Point2& p) { return inside(p) ? inner_u(p) : poly(p); };
    c.exact_grad = [inside](const Point2& p) { return inside(p) ? inner_grad(p) : poly_grad(p); };
    c.source_f = [inside](const Point2& p) { return inside(p) ? -inner_laplacian(p) : -poly_laplacian(p); };
    c.interface_g = poly;
    c.extension_g_tilde = [](const Point2& p) { return poly(p) * std::cos(1.0 - radius2(p)); };
    if (outer == OuterCondition::LiteralZero)
        c.outer_value = [](const Point2&) { return 0.0; };
    else
        c.outer_value = c.exact_u;
    return c;
}

AnalyticCase polygonal_outer_branch_case()
{
    AnalyticCase c;
    c.name = "polygonal_outer_branch";
    c.domain = level_set_domain([](const Point2&) { return 1.0; });
    c.exact_u = poly;
    c.exact_grad = poly_grad;
    c.source_f = [](const Point2& p) { return -poly_laplacian(p); };
    c.interface_g = poly;
    c.extension_g_tilde = poly;
    c.outer_value = poly;
    return c;
}

} // namespace dibm
