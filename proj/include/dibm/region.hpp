#pragma once

#include "dibm/exec.hpp"
#include "dibm/mesh.hpp"

#include <cstdint>
#include <vector>

namespace dibm {

enum class TriangleTag : std::uint8_t { Free = 0, Tube = 1 };
enum class VertexTag : std::uint8_t { Free = 0, ConstrainedInterface = 1, ConstrainedOuter = 2 };

/// Discrete diffuse interface: the tube triangles (meeting {|d| <= eps}), the
/// vertices they constrain, and the measured widths.
struct RegionMap {
    std::vector<TriangleTag> triangle_tag;
    std::vector<VertexTag> vertex_tag;
    double epsilon = 0.0;
    /// Max diameter of tube triangles not contained in the closed tube.
    double delta = 0.0;
    /// Max diameter of triangles meeting {|d| = eps + h}, h the global max diameter.
    double kappa = 0.0;

    [[nodiscard]] bool is_tube(int t) const { return triangle_tag[t] == TriangleTag::Tube; }
    [[nodiscard]] bool is_constrained(int v) const { return vertex_tag[v] != VertexTag::Free; }
    [[nodiscard]] std::size_t tube_count() const;
    [[nodiscard]] std::size_t free_vertex_count() const;
};

RegionMap classify(const TriMesh& mesh, const ImplicitDomain& dom, double eps, Exec exec = Exec::Parallel);

} // namespace dibm
