#pragma once

#include "dibm/mesh.hpp"

#include <array>
#include <span>
#include <vector>

namespace dibm {

/// Part of box b_v inside one triangle: the quadrilateral
/// (vertex, midpoint of one incident edge, barycenter, midpoint of the other).
struct BoxFragment {
    int triangle = -1;
    int vertex = -1;
    std::array<Point2, 4> polygon;
    double area = 0.0;
};

/// Dual segment from an edge midpoint to the barycenter of an adjacent
/// triangle. `normal` is the unit normal pointing out of the box of edge.a
/// (towards the box of edge.b).
struct DualSegment {
    int triangle = -1;
    Point2 from;
    Point2 to;
    Point2 normal;
    double length = 0.0;
};

/// Barycentric dual ("box") mesh. Every vertex gets a box, boundary vertices
/// included; those boxes are clipped by the outer boundary.
struct DualMesh {
    std::vector<std::vector<BoxFragment>> boxes; // per vertex
    std::vector<double> box_area;                // per vertex
    std::vector<std::array<DualSegment, 2>> flux_edges; // per mesh edge; second unused on boundary edges
};

DualMesh build_dual(const TriMesh& mesh);

/// Per-triangle gradients of the three local hat functions.
std::array<Point2, 3> hat_gradients(const Triangle& tri);

/// -(closed integral over the box boundary of v) of grad(u) . n_b, for a P1 field
/// given by its constant gradient on each triangle. Only dual segments
/// contribute; v must be an interior vertex.
double box_boundary_integral_of_flux(const TriMesh& mesh, const DualMesh& dual, std::span<const Point2> gradients,
                                     int v);

/// Per-triangle gradient of the P1 interpolant with the given nodal values.
std::vector<Point2> p1_gradients(const TriMesh& mesh, std::span<const double> nodal);

} // namespace dibm
