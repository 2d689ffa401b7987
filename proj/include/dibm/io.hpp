#pragma once

#include "dibm/dual_mesh.hpp"
#include "dibm/linalg.hpp"
#include "dibm/mesh.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace dibm {

using NamedField = std::pair<std::string, std::vector<double>>;

/// Legacy VTK 3.0 ASCII unstructured grid: triangles as VTK_TRIANGLE (5),
/// double coordinates, scalar fields on points and cells.
void write_vtk(std::ostream& os, const TriMesh& mesh, const std::vector<NamedField>& point_fields = {},
               const std::vector<NamedField>& cell_fields = {});
void write_vtk(const std::string& path, const TriMesh& mesh, const std::vector<NamedField>& point_fields = {},
               const std::vector<NamedField>& cell_fields = {});

/// Legacy VTK POLYDATA with one quadrilateral polygon per box fragment and
/// the owning vertex as a cell scalar (plus optional per-vertex fields mapped
/// onto the fragments).
void write_dual_vtk(std::ostream& os, const DualMesh& dual, const std::vector<NamedField>& box_fields = {});
void write_dual_vtk(const std::string& path, const DualMesh& dual, const std::vector<NamedField>& box_fields = {});

/// MatrixMarket coordinate real general, 1-based indices.
void write_matrix_market(std::ostream& os, const SparseMatrix& matrix);

/// Scientific notation with 12 significant digits.
std::string format_real(double value);

} // namespace dibm
