#pragma once

#include "dibm/cases.hpp"
#include "dibm/dual_mesh.hpp"
#include "dibm/exec.hpp"
#include "dibm/linalg.hpp"
#include "dibm/region.hpp"

#include <optional>
#include <span>
#include <vector>

namespace dibm {

/// Vertex-to-vertex adjacency pattern (self included) over all mesh vertices.
SparseMatrix stiffness_pattern(const TriMesh& mesh);

/// Galerkin P1 stiffness: entry (v, w) = integral of grad(phi_v) . grad(phi_w).
/// Serial path scatters triangle by triangle; the parallel path gathers each
/// row from the triangles incident to its vertex.
SparseMatrix assemble_stiffness_fem(const TriMesh& mesh, Exec exec = Exec::Parallel);

/// Box-method stiffness: row v holds -(flux of grad(phi_w) through the dual
/// segments bounding b_v). Serial path scatters edge by edge over the dual
/// segments; the parallel path gathers per row.
SparseMatrix assemble_stiffness_box(const TriMesh& mesh, const DualMesh& dual, Exec exec = Exec::Parallel);

/// Entry v = integral of f over b_v (each fragment split in two triangles,
/// degree-2 quadrature on each).
std::vector<double> assemble_load_box(const TriMesh& mesh, const DualMesh& dual, const ScalarFn& f,
                                      Exec exec = Exec::Parallel);

/// Entry v = integral of f phi_v (degree-4 quadrature per triangle).
std::vector<double> assemble_load_fem(const TriMesh& mesh, const ScalarFn& f, Exec exec = Exec::Parallel);

/// Nodal (Lagrange P1) interpolant.
std::vector<double> interpolate(const ScalarFn& fn, const TriMesh& mesh);

/// Operator, right-hand side and the Dirichlet values eliminated from it.
struct SparseSystem {
    SparseMatrix matrix;
    std::vector<double> rhs;
    std::vector<std::optional<double>> constraints; // per vertex

    [[nodiscard]] bool is_constrained(int v) const { return constraints[v].has_value(); }
};

/// Symmetric elimination: moves known values to the right-hand side of free
/// rows and replaces constrained rows and columns by the identity.
SparseSystem apply_dirichlet(SparseMatrix matrix, std::vector<double> rhs,
                             std::vector<std::optional<double>> constraints);

/// Constrains CONSTRAINED_INTERFACE vertices to g_tilde_h and CONSTRAINED_OUTER
/// vertices to outer. A NaN (or missing entry) at a constrained vertex throws.
SparseSystem apply_constraints(SparseMatrix matrix, std::vector<double> rhs, const RegionMap& region,
                               std::span<const double> g_tilde_h, std::span<const double> outer);

/// Only the outer boundary constrained (no diffuse interface).
SparseSystem apply_outer_constraints(SparseMatrix matrix, std::vector<double> rhs, const TriMesh& mesh,
                                     std::span<const double> outer);

} // namespace dibm
