#include "dibm/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dibm {

namespace {

int local_index(const std::array<int, 3>& tri, int v) { return tri[0] == v ? 0 : (tri[1] == v ? 1 : 2); }

// Adds v to entry (row, col); col must be in the pattern of row.
void add_to_row(SparseMatrix& m, int row, int col, double v) { m.values()[m.slot(row, col)] += v; }

void require_valid_triangles(const TriMesh& mesh)
{
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        const Triangle tri = mesh.triangle(static_cast<int>(t));
        const double scale = diameter(tri);
        if (!(signed_area(tri) > 1e-14 * scale * scale))
            throw std::invalid_argument("degenerate element");
    }
}

} // namespace

SparseMatrix stiffness_pattern(const TriMesh& mesh)
{
    std::vector<std::vector<int>> rows(mesh.num_vertices());
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        auto& r = rows[v];
        for (int t : mesh.incident(static_cast<int>(v)))
            for (int w : mesh.triangles()[t])
                r.push_back(w);
        r.push_back(static_cast<int>(v));
    }
    return SparseMatrix::from_pattern(std::move(rows));
}

SparseMatrix assemble_stiffness_fem(const TriMesh& mesh, Exec exec)
{
    require_valid_triangles(mesh);
    SparseMatrix a = stiffness_pattern(mesh);
    const int nt = static_cast<int>(mesh.num_triangles());
    const int nv = static_cast<int>(mesh.num_vertices());

    if (exec == Exec::Serial) {
        for (int t = 0; t < nt; ++t) {
            const Triangle tri = mesh.triangle(t);
            const double area = signed_area(tri);
            const auto g = hat_gradients(tri);
            const auto& vs = mesh.triangles()[t];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    add_to_row(a, vs[i], vs[j], area * dot(g[i], g[j]));
        }
        return a;
    }

#pragma omp parallel for schedule(dynamic, 256)
    for (int v = 0; v < nv; ++v) {
        for (int t : mesh.incident(v)) {
            const Triangle tri = mesh.triangle(t);
            const double area = signed_area(tri);
            const auto g = hat_gradients(tri);
            const auto& vs = mesh.triangles()[t];
            const int i = local_index(vs, v);
            for (int j = 0; j < 3; ++j)
                add_to_row(a, v, vs[j], area * dot(g[i], g[j]));
        }
    }
    return a;
}

SparseMatrix assemble_stiffness_box(const TriMesh& mesh, const DualMesh& dual, Exec exec)
{
    require_valid_triangles(mesh);
    SparseMatrix a = stiffness_pattern(mesh);
    const int nv = static_cast<int>(mesh.num_vertices());

    if (exec == Exec::Serial) {
        for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
            const Edge& edge = mesh.edges()[e];
            for (int k = 0; k < 2; ++k) {
                const int t = edge.tri[k];
                if (t < 0)
                    continue;
                const DualSegment& seg = dual.flux_edges[e][k];
                const auto g = hat_gradients(mesh.triangle(t));
                const auto& vs = mesh.triangles()[t];
                for (int j = 0; j < 3; ++j) {
                    const double flux = seg.length * dot(g[j], seg.normal);
                    // the segment's normal points out of b_a and into b_b
                    add_to_row(a, edge.a, vs[j], -flux);
                    add_to_row(a, edge.b, vs[j], flux);
                }
            }
        }
        return a;
    }

#pragma omp parallel for schedule(dynamic, 256)
    for (int v = 0; v < nv; ++v) {
        for (int t : mesh.incident(v)) {
            const auto g = hat_gradients(mesh.triangle(t));
            const auto& vs = mesh.triangles()[t];
            for (int k = 0; k < 3; ++k) {
                if (vs[k] == v)
                    continue;
                const int e = mesh.triangle_edge(t, k);
                const Edge& edge = mesh.edges()[e];
                const DualSegment& seg = dual.flux_edges[e][edge.tri[0] == t ? 0 : 1];
                const double sign = edge.a == v ? 1.0 : -1.0;
                for (int j = 0; j < 3; ++j)
                    add_to_row(a, v, vs[j], -sign * seg.length * dot(g[j], seg.normal));
            }
        }
    }
    return a;
}

std::vector<double> assemble_load_box(const TriMesh& mesh, const DualMesh& dual, const ScalarFn& f, Exec exec)
{
    const auto& rule = quadrature(2);
    const int nv = static_cast<int>(mesh.num_vertices());
    std::vector<double> load(nv, 0.0);

    auto box_integral = [&](int v) {
        double sum = 0.0;
        for (const auto& frag : dual.boxes[v]) {
            const auto& q = frag.polygon;
            sum += integrate(Triangle{q[0], q[1], q[2]}, rule, f);
            sum += integrate(Triangle{q[0], q[2], q[3]}, rule, f);
        }
        return sum;
    };

    if (exec == Exec::Serial) {
        for (int v = 0; v < nv; ++v)
            load[v] = box_integral(v);
    } else {
#pragma omp parallel for schedule(dynamic, 256)
        for (int v = 0; v < nv; ++v)
            load[v] = box_integral(v);
    }
    return load;
}

std::vector<double> assemble_load_fem(const TriMesh& mesh, const ScalarFn& f, Exec exec)
{
    const auto& rule = quadrature(4);
    const int nv = static_cast<int>(mesh.num_vertices());
    std::vector<double> load(nv, 0.0);

    auto weighted = [&](int t, int local) {
        const Triangle tri = mesh.triangle(t);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q)
            sum += rule.weights[q] * rule.points[q][local] * f(from_barycentric(tri, rule.points[q]));
        return signed_area(tri) * sum;
    };

    if (exec == Exec::Serial) {
        for (int t = 0; t < static_cast<int>(mesh.num_triangles()); ++t)
            for (int i = 0; i < 3; ++i)
                load[mesh.triangles()[t][i]] += weighted(t, i);
        return load;
    }
#pragma omp parallel for schedule(dynamic, 256)
    for (int v = 0; v < nv; ++v) {
        double sum = 0.0;
        for (int t : mesh.incident(v))
            sum += weighted(t, local_index(mesh.triangles()[t], v));
        load[v] = sum;
    }
    return load;
}

std::vector<double> interpolate(const ScalarFn& fn, const TriMesh& mesh)
{
    std::vector<double> values(mesh.num_vertices());
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        values[v] = fn(mesh.vertex(static_cast<int>(v)));
    return values;
}

SparseSystem apply_dirichlet(SparseMatrix matrix, std::vector<double> rhs,
                             std::vector<std::optional<double>> constraints)
{
    const int n = matrix.size();
    if (static_cast<int>(rhs.size()) != n || static_cast<int>(constraints.size()) != n)
        throw std::invalid_argument("apply_dirichlet: dimension mismatch");

    for (int i = 0; i < n; ++i) {
        const auto cols = matrix.row_cols(i);
        auto vals = matrix.row_values(i);
        if (constraints[i]) {
            for (std::size_t k = 0; k < cols.size(); ++k)
                vals[k] = cols[k] == i ? 1.0 : 0.0;
            rhs[i] = *constraints[i];
            continue;
        }
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (const auto& c = constraints[cols[k]]) {
                rhs[i] -= vals[k] * *c;
                vals[k] = 0.0;
            }
        }
    }
    return {std::move(matrix), std::move(rhs), std::move(constraints)};
}

SparseSystem apply_constraints(SparseMatrix matrix, std::vector<double> rhs, const RegionMap& region,
                               std::span<const double> g_tilde_h, std::span<const double> outer)
{
    const std::size_t n = region.vertex_tag.size();
    std::vector<std::optional<double>> constraints(n);
    for (std::size_t v = 0; v < n; ++v) {
        const VertexTag tag = region.vertex_tag[v];
        if (tag == VertexTag::Free)
            continue;
        const auto source = tag == VertexTag::ConstrainedInterface ? g_tilde_h : outer;
        if (v >= source.size() || std::isnan(source[v]))
            throw std::invalid_argument("apply_constraints: constrained vertex " + std::to_string(v) +
                                        " has no prescribed value");
        constraints[v] = source[v];
    }
    return apply_dirichlet(std::move(matrix), std::move(rhs), std::move(constraints));
}

SparseSystem apply_outer_constraints(SparseMatrix matrix, std::vector<double> rhs, const TriMesh& mesh,
                                     std::span<const double> outer)
{
    if (outer.size() != mesh.num_vertices())
        throw std::invalid_argument("apply_outer_constraints: one value per vertex required");
    std::vector<std::optional<double>> constraints(mesh.num_vertices());
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        if (mesh.is_boundary_vertex(static_cast<int>(v)))
            constraints[v] = outer[v];
    return apply_dirichlet(std::move(matrix), std::move(rhs), std::move(constraints));
}

} // namespace dibm
