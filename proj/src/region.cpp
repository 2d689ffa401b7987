#include "dibm/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace dibm {

std::size_t RegionMap::tube_count() const
{
    return static_cast<std::size_t>(std::count(triangle_tag.begin(), triangle_tag.end(), TriangleTag::Tube));
}

std::size_t RegionMap::free_vertex_count() const
{
    return static_cast<std::size_t>(std::count(vertex_tag.begin(), vertex_tag.end(), VertexTag::Free));
}

RegionMap classify(const TriMesh& mesh, const ImplicitDomain& dom, double eps, Exec exec)
{
    if (eps < 0.0)
        throw std::invalid_argument("classify: eps must be non-negative");

    const int nt = static_cast<int>(mesh.num_triangles());
    const double h = max_diameter(mesh);

    RegionMap map;
    map.epsilon = eps;
    map.triangle_tag.assign(nt, TriangleTag::Free);
    std::vector<double> crossed_diam(nt, 0.0);
    std::vector<double> kappa_diam(nt, 0.0);

    auto tag_one = [&](int t) {
        const Triangle tri = mesh.triangle(t);
        const auto range = abs_distance_range(tri, dom);
        const double diam = diameter(tri);
        if (range.lo <= eps) {
            map.triangle_tag[t] = TriangleTag::Tube;
            if (range.hi > eps)
                crossed_diam[t] = diam;
        }
        if (range.lo <= eps + h && eps + h <= range.hi)
            kappa_diam[t] = diam;
    };

    if (exec == Exec::Serial) {
        for (int t = 0; t < nt; ++t)
            tag_one(t);
    } else {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < nt; ++t)
            tag_one(t);
    }

    // max is order-independent, so both paths agree exactly
    for (int t = 0; t < nt; ++t) {
        map.delta = std::max(map.delta, crossed_diam[t]);
        map.kappa = std::max(map.kappa, kappa_diam[t]);
    }

    map.vertex_tag.assign(mesh.num_vertices(), VertexTag::Free);
    for (int t = 0; t < nt; ++t)
        if (map.is_tube(t))
            for (int v : mesh.triangles()[t])
                map.vertex_tag[v] = VertexTag::ConstrainedInterface;
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        if (mesh.is_boundary_vertex(static_cast<int>(v)))
            map.vertex_tag[v] = VertexTag::ConstrainedOuter;
    return map;
}

} // namespace dibm
