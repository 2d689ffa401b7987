#include "dibm/dual_mesh.hpp"

#include <stdexcept>
#include <string>

namespace dibm {

namespace {

// Area of (p, mid(p,next), bary, mid(p,prev)) from the edge vectors a = next - p
// and b = prev - p, so rounding of the corner coordinates does not enter.
double fragment_area(Point2 a, Point2 b)
{
    const Point2 diag1 = (1.0 / 3.0) * (a + b);
    const Point2 diag2 = 0.5 * (b - a);
    return 0.5 * cross(diag1, diag2);
}

} // namespace

std::array<Point2, 3> hat_gradients(const Triangle& tri)
{
    const double twice_area = 2.0 * signed_area(tri);
    std::array<Point2, 3> g;
    for (int i = 0; i < 3; ++i) {
        const Point2& pj = tri[(i + 1) % 3];
        const Point2& pk = tri[(i + 2) % 3];
        g[i] = Point2{(pj.y - pk.y) / twice_area, (pk.x - pj.x) / twice_area};
    }
    return g;
}

DualMesh build_dual(const TriMesh& mesh)
{
    const int nv = static_cast<int>(mesh.num_vertices());

    DualMesh dual;
    dual.boxes.resize(nv);
    dual.box_area.assign(nv, 0.0);

    for (int v = 0; v < nv; ++v) {
        for (int t : mesh.incident(v)) {
            const auto& tri = mesh.triangles()[t];
            const int local = tri[0] == v ? 0 : (tri[1] == v ? 1 : 2);
            const Triangle geom = mesh.triangle(t);
            const Point2 p = geom[local];
            const Point2 next = geom[(local + 1) % 3];
            const Point2 prev = geom[(local + 2) % 3];
            BoxFragment frag;
            frag.triangle = t;
            frag.vertex = v;
            // counterclockwise, like the parent triangle
            frag.polygon = {p, midpoint(p, next), barycenter(geom), midpoint(p, prev)};
            frag.area = fragment_area(next - p, prev - p);
            dual.box_area[v] += frag.area;
            dual.boxes[v].push_back(frag);
        }
    }

    dual.flux_edges.resize(mesh.num_edges());
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
        const Edge& edge = mesh.edges()[e];
        const Point2 pa = mesh.vertex(edge.a);
        const Point2 pb = mesh.vertex(edge.b);
        const Point2 m = midpoint(pa, pb);
        for (int k = 0; k < 2; ++k) {
            const int t = edge.tri[k];
            if (t < 0)
                continue;
            DualSegment seg;
            seg.triangle = t;
            seg.from = m;
            seg.to = barycenter(mesh.triangle(t));
            const Point2 d = seg.to - seg.from;
            seg.length = norm(d);
            Point2 n{d.y / seg.length, -d.x / seg.length};
            if (dot(n, pb - pa) < 0.0)
                n = -1.0 * n;
            seg.normal = n;
            dual.flux_edges[e][k] = seg;
        }
    }
    return dual;
}

double box_boundary_integral_of_flux(const TriMesh& mesh, const DualMesh& dual, std::span<const Point2> gradients,
                                     int v)
{
    if (v < 0 || v >= static_cast<int>(mesh.num_vertices()))
        throw std::out_of_range("box_boundary_integral_of_flux: vertex out of range");
    if (mesh.is_boundary_vertex(v))
        throw std::invalid_argument("no test function for boundary vertex");
    if (gradients.size() != mesh.num_triangles())
        throw std::invalid_argument("box_boundary_integral_of_flux: one gradient per triangle required");

    double flux = 0.0;
    for (int t : mesh.incident(v)) {
        const auto& tri = mesh.triangles()[t];
        for (int k = 0; k < 3; ++k) {
            if (tri[k] == v)
                continue; // edge opposite v does not bound b_v
            const int e = mesh.triangle_edge(t, k);
            const Edge& edge = mesh.edges()[e];
            const DualSegment& seg = dual.flux_edges[e][edge.tri[0] == t ? 0 : 1];
            const double sign = edge.a == v ? 1.0 : -1.0;
            flux -= seg.length * sign * dot(gradients[t], seg.normal);
        }
    }
    return flux;
}

std::vector<Point2> p1_gradients(const TriMesh& mesh, std::span<const double> nodal)
{
    if (nodal.size() != mesh.num_vertices())
        throw std::invalid_argument("p1_gradients: one value per vertex required");
    std::vector<Point2> grads(mesh.num_triangles());
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        const auto g = hat_gradients(mesh.triangle(static_cast<int>(t)));
        const auto& tri = mesh.triangles()[t];
        grads[t] = nodal[tri[0]] * g[0] + nodal[tri[1]] * g[1] + nodal[tri[2]] * g[2];
    }
    return grads;
}

} // namespace dibm
