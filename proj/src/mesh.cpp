#include "dibm/mesh.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace dibm {

namespace {

std::uint64_t edge_key(int a, int b)
{
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

} // namespace

TriMesh::TriMesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles))
{
    const int nv = static_cast<int>(vertices_.size());
    const int nt = static_cast<int>(triangles_.size());

    for (int t = 0; t < nt; ++t) {
        for (int v : triangles_[t])
            if (v < 0 || v >= nv)
                throw std::invalid_argument("TriMesh: vertex index out of range in triangle " + std::to_string(t));
        const Triangle tri = triangle(t);
        const double scale = diameter(tri);
        const double area = signed_area(tri);
        if (!(std::abs(area) > 1e-14 * scale * scale))
            throw std::invalid_argument("degenerate element");
        if (area < 0.0)
            throw std::invalid_argument("TriMesh: triangle " + std::to_string(t) + " is clockwise");
    }

    // (key, triangle, local vertex opposite the edge)
    std::vector<std::tuple<std::uint64_t, int, int>> half_edges;
    half_edges.reserve(3 * triangles_.size());
    for (int t = 0; t < nt; ++t)
        for (int k = 0; k < 3; ++k)
            half_edges.emplace_back(edge_key(triangles_[t][(k + 1) % 3], triangles_[t][(k + 2) % 3]), t, k);
    std::sort(half_edges.begin(), half_edges.end());

    triangle_edges_.assign(triangles_.size(), {-1, -1, -1});
    for (std::size_t i = 0; i < half_edges.size();) {
        std::size_t j = i;
        while (j < half_edges.size() && std::get<0>(half_edges[j]) == std::get<0>(half_edges[i]))
            ++j;
        if (j - i > 2)
            throw std::invalid_argument("TriMesh: edge shared by more than two triangles");
        const auto key = std::get<0>(half_edges[i]);
        Edge e;
        e.a = static_cast<int>(key >> 32);
        e.b = static_cast<int>(key & 0xffffffffu);
        const int id = static_cast<int>(edges_.size());
        for (std::size_t k = i; k < j; ++k) {
            const auto [_, t, local] = half_edges[k];
            e.tri[k - i] = t;
            triangle_edges_[t][local] = id;
        }
        edges_.push_back(e);
        i = j;
    }

    kinds_.assign(vertices_.size(), VertexKind::Interior);
    for (const auto& e : edges_) {
        if (e.on_boundary()) {
            kinds_[e.a] = VertexKind::OuterBoundary;
            kinds_[e.b] = VertexKind::OuterBoundary;
        }
    }

    incident_offsets_.assign(vertices_.size() + 1, 0);
    for (const auto& tri : triangles_)
        for (int v : tri)
            ++incident_offsets_[v + 1];
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        incident_offsets_[v + 1] += incident_offsets_[v];
    incident_.resize(incident_offsets_.back());
    std::vector<int> fill(incident_offsets_.begin(), incident_offsets_.end() - 1);
    for (int t = 0; t < nt; ++t)
        for (int v : triangles_[t])
            incident_[fill[v]++] = t;
}

double TriMesh::total_area() const
{
    double sum = 0.0;
    for (std::size_t t = 0; t < triangles_.size(); ++t)
        sum += area(static_cast<int>(t));
    return sum;
}

TriMesh generate_uniform(int n)
{
    if (n < 2)
        throw std::invalid_argument("generate_uniform: n must be >= 2");

    const int stride = n + 1;
    std::vector<Point2> vertices;
    vertices.reserve(static_cast<std::size_t>(stride) * stride);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            vertices.emplace_back(-1.0 + 2.0 * i / n, -1.0 + 2.0 * j / n);

    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(2 * static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = j * stride + i;
            const int v10 = v00 + 1;
            const int v01 = v00 + stride;
            const int v11 = v01 + 1;
            // right-angle vertex first, so the refinement edge is the diagonal
            triangles.push_back({v10, v11, v00});
            triangles.push_back({v01, v00, v11});
        }
    }

    TriMesh mesh(std::move(vertices), std::move(triangles));
    mesh.grid_spacing = 2.0 / n;
    return mesh;
}

double max_diameter(const TriMesh& mesh)
{
    double h = 0.0;
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
        h = std::max(h, diameter(mesh.triangle(static_cast<int>(t))));
    return h;
}

double min_angle_deg(const TriMesh& mesh)
{
    double a = 180.0;
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
        a = std::min(a, min_angle_deg(mesh.triangle(static_cast<int>(t))));
    return a;
}

int euler_characteristic(const TriMesh& mesh)
{
    return static_cast<int>(mesh.num_vertices()) - static_cast<int>(mesh.num_edges()) +
           static_cast<int>(mesh.num_triangles());
}

namespace {

class Bisector {
public:
    Bisector(std::vector<Point2>& vertices, const std::unordered_set<std::uint64_t>& marked,
             std::vector<std::array<int, 3>>& out)
        : vertices_(vertices), marked_(marked), out_(out)
    {
    }

    void split(const std::array<int, 3>& tri)
    {
        const auto [v0, v1, v2] = tri;
        if (!marked_.contains(edge_key(v1, v2))) {
            out_.push_back(tri);
            return;
        }
        const int m = midpoint_vertex(v1, v2);
        split({m, v0, v1});
        split({m, v2, v0});
    }

private:
    int midpoint_vertex(int a, int b)
    {
        const auto [it, inserted] = midpoints_.try_emplace(edge_key(a, b), static_cast<int>(vertices_.size()));
        if (inserted)
            vertices_.push_back(midpoint(vertices_[a], vertices_[b]));
        return it->second;
    }

    std::vector<Point2>& vertices_;
    const std::unordered_set<std::uint64_t>& marked_;
    std::vector<std::array<int, 3>>& out_;
    std::unordered_map<std::uint64_t, int> midpoints_;
};

} // namespace

TriMesh refine_near_interface(const TriMesh& mesh, const ImplicitDomain& dom, double band, double target,
                              const RefineOptions& options)
{
    if (!(band > 0.0) || !(target > 0.0))
        throw std::invalid_argument("refine_near_interface: band and target must be positive");

    TriMesh current = mesh;
    for (int sweep = 0;; ++sweep) {
        std::unordered_set<std::uint64_t> marked;
        for (std::size_t t = 0; t < current.num_triangles(); ++t) {
            const Triangle tri = current.triangle(static_cast<int>(t));
            if (diameter(tri) <= target || abs_distance_range(tri, dom).lo > band)
                continue;
            const auto& v = current.triangles()[t];
            marked.insert(edge_key(v[0], v[1]));
            marked.insert(edge_key(v[1], v[2]));
            marked.insert(edge_key(v[2], v[0]));
        }
        if (marked.empty())
            break;
        if (sweep >= options.max_sweeps)
            throw std::runtime_error("refine_near_interface: no convergence after " +
                                     std::to_string(options.max_sweeps) + " sweeps");

        // Closure: a triangle with any marked edge must bisect its refinement edge.
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& v : current.triangles()) {
                const auto ref = edge_key(v[1], v[2]);
                if (marked.contains(ref))
                    continue;
                if (marked.contains(edge_key(v[0], v[1])) || marked.contains(edge_key(v[2], v[0]))) {
                    marked.insert(ref);
                    changed = true;
                }
            }
        }

        std::vector<Point2> vertices = current.vertices();
        std::vector<std::array<int, 3>> triangles;
        triangles.reserve(current.num_triangles() * 2);
        Bisector bisector(vertices, marked, triangles);
        for (const auto& tri : current.triangles())
            bisector.split(tri);
        current = TriMesh(std::move(vertices), std::move(triangles));
    }

    const double angle = min_angle_deg(current);
    if (angle < options.min_angle_deg)
        throw std::runtime_error("refine_near_interface: min angle " + std::to_string(angle) +
                                 " below threshold");
    current.grid_spacing = mesh.grid_spacing;
    return current;
}

} // namespace dibm
