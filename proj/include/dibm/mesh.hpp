#pragma once

#include "dibm/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dibm {

enum class VertexKind : std::uint8_t { Interior, OuterBoundary };

struct Edge {
    int a = -1;                 // a < b
    int b = -1;
    std::array<int, 2> tri{-1, -1}; // tri[1] == -1 on the boundary

    [[nodiscard]] bool on_boundary() const { return tri[1] < 0; }
};

/// Conforming triangulation with derived topology.
///
/// Triangles are stored counterclockwise. The first local vertex of every
/// triangle is its "newest vertex": the opposite edge (local 1-2) is the edge
/// bisected by refinement.
class TriMesh {
public:
    TriMesh() = default;

    /// Builds topology (edges, incidence, boundary flags) from raw arrays.
    /// Throws on clockwise or degenerate triangles and on non-manifold edges.
    TriMesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles);

    [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
    [[nodiscard]] std::size_t num_triangles() const { return triangles_.size(); }
    [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }

    [[nodiscard]] const std::vector<Point2>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<VertexKind>& vertex_kinds() const { return kinds_; }

    [[nodiscard]] const Point2& vertex(int v) const { return vertices_[v]; }
    [[nodiscard]] Triangle triangle(int t) const
    {
        const auto& tri = triangles_[t];
        return {vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]};
    }
    [[nodiscard]] bool is_boundary_vertex(int v) const { return kinds_[v] == VertexKind::OuterBoundary; }

    /// Triangles incident to vertex v.
    [[nodiscard]] std::span<const int> incident(int v) const
    {
        return {incident_.data() + incident_offsets_[v], incident_.data() + incident_offsets_[v + 1]};
    }

    /// Edge index opposite local vertex k of triangle t.
    [[nodiscard]] int triangle_edge(int t, int k) const { return triangle_edges_[t][k]; }

    [[nodiscard]] double area(int t) const { return signed_area(triangle(t)); }
    [[nodiscard]] double total_area() const;

    /// Grid spacing 2/n for meshes from generate_uniform, unset otherwise.
    std::optional<double> grid_spacing;

private:
    std::vector<Point2> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<VertexKind> kinds_;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 3>> triangle_edges_;
    std::vector<int> incident_offsets_;
    std::vector<int> incident_;
};

/// Structured mesh of (-1,1)^2: n x n squares, each split by its
/// lower-left to upper-right diagonal.
TriMesh generate_uniform(int n);

/// Max over triangles of the longest edge.
double max_diameter(const TriMesh& mesh);

double min_angle_deg(const TriMesh& mesh);

struct RefineOptions {
    int max_sweeps = 25;
    double min_angle_deg = 20.0;
};

/// Refines every triangle whose |distance| range meets [0, band] until its
/// diameter is <= target. Marked triangles are split into four similar
/// children (three bisections); conformity is restored by newest-vertex
/// bisection of the neighbours. Existing vertices are never moved.
TriMesh refine_near_interface(const TriMesh& mesh, const ImplicitDomain& dom, double band, double target,
                              const RefineOptions& options = {});

/// V - E + T.
int euler_characteristic(const TriMesh& mesh);

} // namespace dibm
