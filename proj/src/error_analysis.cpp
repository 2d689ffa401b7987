#include "dibm/error_analysis.hpp"

#include "dibm/dual_mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dibm {

std::string_view to_string(ErrorRegion region)
{
    switch (region) {
    case ErrorRegion::All: return "all";
    case ErrorRegion::InsideD: return "inside";
    case ErrorRegion::OutsideD: return "outside";
    case ErrorRegion::FreeOnly: return "free";
    }
    return "all";
}

ErrorRegion parse_error_region(std::string_view name)
{
    if (name == "all")
        return ErrorRegion::All;
    if (name == "inside")
        return ErrorRegion::InsideD;
    if (name == "outside")
        return ErrorRegion::OutsideD;
    if (name == "free")
        return ErrorRegion::FreeOnly;
    throw std::invalid_argument("unknown region '" + std::string(name) + "'");
}

namespace {

struct Contribution {
    double l2 = 0.0;
    double h1 = 0.0;
};

void subdivide(const Triangle& t, int levels, std::vector<Triangle>& out)
{
    if (levels == 0) {
        out.push_back(t);
        return;
    }
    const Point2 m01 = midpoint(t[0], t[1]);
    const Point2 m12 = midpoint(t[1], t[2]);
    const Point2 m20 = midpoint(t[2], t[0]);
    subdivide({t[0], m01, m20}, levels - 1, out);
    subdivide({m01, t[1], m12}, levels - 1, out);
    subdivide({m20, m12, t[2]}, levels - 1, out);
    subdivide({m01, m12, m20}, levels - 1, out);
}

bool selected(ErrorRegion region, const Triangle& tri, int t, const AnalyticCase& problem, const RegionMap& map)
{
    switch (region) {
    case ErrorRegion::All: return true;
    case ErrorRegion::InsideD: return problem.domain(barycenter(tri)) <= 0.0;
    case ErrorRegion::OutsideD: return problem.domain(barycenter(tri)) > 0.0;
    case ErrorRegion::FreeOnly: return !map.is_tube(t);
    }
    return true;
}

} // namespace

ErrorReport compute_errors(const TriMesh& mesh, std::span<const double> field, const AnalyticCase& problem,
                           ErrorRegion region, const RegionMap& region_map, const ErrorOptions& options)
{
    if (field.size() != mesh.num_vertices())
        throw std::invalid_argument("compute_errors: field size does not match the mesh");
    if (region == ErrorRegion::FreeOnly && region_map.triangle_tag.size() != mesh.num_triangles())
        throw std::invalid_argument("compute_errors: region map does not match the mesh");
    const auto& rule = quadrature(options.quadrature_degree);
    const int nt = static_cast<int>(mesh.num_triangles());
    std::vector<Contribution> parts(nt);

    auto one = [&](int t) {
        const Triangle tri = mesh.triangle(t);
        if (!selected(region, tri, t, problem, region_map))
            return;
        const auto& vs = mesh.triangles()[t];
        const auto g = hat_gradients(tri);
        const Point2 grad_h = field[vs[0]] * g[0] + field[vs[1]] * g[1] + field[vs[2]] * g[2];
        std::vector<Triangle> pieces;
        subdivide(tri, options.subdivisions, pieces);
        Contribution c;
        for (const auto& piece : pieces) {
            const double area = std::abs(signed_area(piece));
            for (std::size_t q = 0; q < rule.size(); ++q) {
                const Point2 p = from_barycentric(piece, rule.points[q]);
                // P1 value from the parent triangle
                const double uh = field[vs[0]] + dot(grad_h, p - tri[0]);
                const double du = problem.exact_u(p) - uh;
                const Point2 dg = problem.exact_grad(p) - grad_h;
                c.l2 += area * rule.weights[q] * du * du;
                c.h1 += area * rule.weights[q] * dot(dg, dg);
            }
        }
        parts[t] = c;
    };

    if (options.exec == Exec::Serial) {
        for (int t = 0; t < nt; ++t)
            one(t);
    } else {
#pragma omp parallel for schedule(dynamic, 256)
        for (int t = 0; t < nt; ++t)
            one(t);
    }

    // fixed-order reduction keeps both paths bitwise identical
    Contribution total;
    for (const auto& c : parts) {
        total.l2 += c.l2;
        total.h1 += c.h1;
    }

    ErrorReport report;
    report.l2 = std::sqrt(total.l2);
    report.h1_semi = std::sqrt(total.h1);
    report.h1_full = std::sqrt(total.l2 + total.h1);
    report.region = region;
    report.h = max_diameter(mesh);
    report.epsilon = region_map.epsilon;
    report.delta = region_map.delta;
    report.kappa = region_map.kappa;
    report.dofs = region_map.vertex_tag.empty() ? mesh.num_vertices() : region_map.free_vertex_count();
    return report;
}

std::pair<double, double> field_difference_norms(const TriMesh& mesh, std::span<const double> a,
                                                 std::span<const double> b)
{
    if (a.size() != mesh.num_vertices() || b.size() != mesh.num_vertices())
        throw std::invalid_argument("field_difference_norms: field size does not match the mesh");
    // The difference is P1, so the degree-2 rule is exact for its square.
    const auto& rule = quadrature(2);
    double l2 = 0.0;
    double h1 = 0.0;
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        const Triangle tri = mesh.triangle(static_cast<int>(t));
        const auto& vs = mesh.triangles()[t];
        const std::array<double, 3> d{a[vs[0]] - b[vs[0]], a[vs[1]] - b[vs[1]], a[vs[2]] - b[vs[2]]};
        const auto g = hat_gradients(tri);
        const Point2 dg = d[0] * g[0] + d[1] * g[1] + d[2] * g[2];
        const double area = signed_area(tri);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto& l = rule.points[q];
            const double v = l[0] * d[0] + l[1] * d[1] + l[2] * d[2];
            l2 += area * rule.weights[q] * v * v;
        }
        h1 += area * dot(dg, dg);
    }
    return {std::sqrt(l2), std::sqrt(h1)};
}

std::vector<double> eoc(std::span<const std::pair<double, double>> values)
{
    std::vector<double> rates;
    for (const auto& [p, e] : values)
        if (!(e > 0.0))
            throw std::invalid_argument("eoc: errors must be positive");
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const auto [p0, e0] = values[k];
        const auto [p1, e1] = values[k + 1];
        if (!(p1 < p0))
            throw std::invalid_argument("eoc: parameters must be strictly decreasing");
        rates.push_back(std::log(e0 / e1) / std::log(p0 / p1));
    }
    return rates;
}

} // namespace dibm
