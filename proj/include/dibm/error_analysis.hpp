#pragma once

#include "dibm/cases.hpp"
#include "dibm/exec.hpp"
#include "dibm/mesh.hpp"
#include "dibm/region.hpp"

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dibm {

enum class ErrorRegion { All, InsideD, OutsideD, FreeOnly };

std::string_view to_string(ErrorRegion region);
ErrorRegion parse_error_region(std::string_view name);

struct ErrorReport {
    double l2 = 0.0;
    double h1_semi = 0.0;
    double h1_full = 0.0; // sqrt(l2^2 + h1_semi^2)
    ErrorRegion region = ErrorRegion::All;
    double h = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
    double kappa = 0.0;
    std::size_t dofs = 0;
};

struct ErrorOptions {
    int quadrature_degree = 4;
    /// Each level splits every triangle into four before applying the rule.
    int subdivisions = 0;
    Exec exec = Exec::Parallel;
};

/// L2 and H1-seminorm errors of a P1 field against the exact solution over the
/// selected triangles. Triangles are assigned to INSIDE_D / OUTSIDE_D by the
/// sign at their barycenter; the exact branch follows the pointwise sign.
ErrorReport compute_errors(const TriMesh& mesh, std::span<const double> field, const AnalyticCase& problem,
                           ErrorRegion region, const RegionMap& region_map, const ErrorOptions& options = {});

/// Errors of the difference of two P1 fields (no exact solution involved).
std::pair<double, double> field_difference_norms(const TriMesh& mesh, std::span<const double> a,
                                                 std::span<const double> b);

/// rate_k = log(e_k / e_{k+1}) / log(p_k / p_{k+1}).
std::vector<double> eoc(std::span<const std::pair<double, double>> values);

} // namespace dibm
