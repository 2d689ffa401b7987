#pragma once

#include "dibm/geometry.hpp"

#include <functional>
#include <string>

namespace dibm {

using ScalarFn = std::function<double(const Point2&)>;
using VectorFn = std::function<Point2(const Point2&)>;

/// Manufactured problem: -Laplace(u) = f in the hold-all square, u = g on the
/// interface, outer Dirichlet datum on the square boundary.
struct AnalyticCase {
    std::string name;
    ScalarFn exact_u;
    VectorFn exact_grad;
    ScalarFn source_f;
    ScalarFn interface_g;
    ScalarFn extension_g_tilde;
    ScalarFn outer_value;
    ImplicitDomain domain;
};

enum class OuterCondition {
    ExactTrace,  // exact_u restricted to the square boundary
    LiteralZero, // u = 0 on the square boundary
};

/// Unit-circle interface in (-1,1)^2 with u = P outside and u = P exp(1 - r^2)
/// on the closed disk, P = (4 - x^2)(4 - y^2). The extension is
/// P cos(1 - r^2). The source is the piecewise -Laplace(u), selected by the sign
/// of the signed distance (closed disk takes the inner branch).
AnalyticCase circle_interface_case(OuterCondition outer = OuterCondition::ExactTrace);

/// Same data restricted to the outer branch everywhere (no interface): a
/// smooth problem on the square for box-vs-Galerkin comparisons.
AnalyticCase polygonal_outer_branch_case();

} // namespace dibm
