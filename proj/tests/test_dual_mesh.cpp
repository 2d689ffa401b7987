#include "dibm/assembly.hpp"
#include "dibm/dual_mesh.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dibm;

namespace {

std::vector<TriMesh> sample_meshes()
{
    std::vector<TriMesh> meshes;
    meshes.push_back(generate_uniform(4));
    meshes.push_back(generate_uniform(9));
    meshes.push_back(refine_near_interface(generate_uniform(8), circle_domain(), 0.05, 0.04));
    meshes.push_back(refine_near_interface(generate_uniform(5), circle_domain({0.3, 0.1}, 0.45), 0.02, 0.03));
    return meshes;
}

int interior_vertex_near(const TriMesh& mesh, Point2 p)
{
    int best = -1;
    double d = 1e300;
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        if (mesh.is_boundary_vertex(static_cast<int>(v)))
            continue;
        const double dv = distance(mesh.vertex(static_cast<int>(v)), p);
        if (dv < d) {
            d = dv;
            best = static_cast<int>(v);
        }
    }
    return best;
}

} // namespace

TEST_CASE("single triangle: three fragments of area 1/6")
{
    const TriMesh mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
    const auto dual = build_dual(mesh);
    for (int v = 0; v < 3; ++v) {
        REQUIRE(dual.boxes[v].size() == 1);
        CHECK(dual.boxes[v][0].area == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
        CHECK(dual.box_area[v] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
        CHECK(dual.boxes[v][0].polygon[0].x == mesh.vertex(v).x);
    }
}

TEST_CASE("uniform grid interior box area is 4/n^2")
{
    for (int n : {4, 8, 13}) {
        const auto mesh = generate_uniform(n);
        const auto dual = build_dual(mesh);
        for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
            if (mesh.is_boundary_vertex(static_cast<int>(v)))
                continue;
            CHECK(mesh.incident(static_cast<int>(v)).size() == 6);
            CHECK(dual.box_area[v] == doctest::Approx(4.0 / (n * n)).epsilon(1e-13));
        }
    }
}

TEST_CASE("box areas partition the domain and fragments tile each triangle")
{
    for (const auto& mesh : sample_meshes()) {
        const auto dual = build_dual(mesh);
        double total = 0.0;
        for (double a : dual.box_area)
            total += a;
        CHECK(std::abs(total - 4.0) <= 1e-12);

        std::vector<double> per_triangle(mesh.num_triangles(), 0.0);
        for (const auto& box : dual.boxes)
            for (const auto& frag : box) {
                const double third = mesh.area(frag.triangle) / 3.0;
                CHECK(std::abs(frag.area - third) <= 1e-13 * third);
                per_triangle[frag.triangle] += frag.area;
            }
        for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
            CHECK(per_triangle[t] == doctest::Approx(mesh.area(static_cast<int>(t))).epsilon(1e-13));
    }
}

TEST_CASE("every box contains its vertex and is connected through it")
{
    const auto mesh = sample_meshes()[2];
    const auto dual = build_dual(mesh);
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        REQUIRE(!dual.boxes[v].empty());
        // all fragments share the owner vertex as a corner, so the union is connected
        for (const auto& frag : dual.boxes[v]) {
            CHECK(frag.polygon[0].x == mesh.vertex(static_cast<int>(v)).x);
            CHECK(frag.polygon[0].y == mesh.vertex(static_cast<int>(v)).y);
        }
    }
}

TEST_CASE("dual segments: unit normals pointing from edge.a to edge.b")
{
    const auto mesh = sample_meshes()[3];
    const auto dual = build_dual(mesh);
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
        const Edge& edge = mesh.edges()[e];
        for (int k = 0; k < 2; ++k) {
            if (edge.tri[k] < 0)
                continue;
            const auto& seg = dual.flux_edges[e][k];
            CHECK(norm(seg.normal) == doctest::Approx(1.0));
            CHECK(dot(seg.normal, seg.to - seg.from) == doctest::Approx(0.0));
            CHECK(dot(seg.normal, mesh.vertex(edge.b) - mesh.vertex(edge.a)) > 0.0);
        }
    }
}

TEST_CASE("box flux of simple fields")
{
    const auto mesh = generate_uniform(6);
    const auto dual = build_dual(mesh);
    const std::vector<Point2> zero(mesh.num_triangles(), Point2{0, 0});
    const auto linear = p1_gradients(mesh, interpolate([](const Point2& p) { return p.x; }, mesh));
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        if (mesh.is_boundary_vertex(static_cast<int>(v))) {
            CHECK_THROWS_WITH(box_boundary_integral_of_flux(mesh, dual, zero, static_cast<int>(v)),
                              "no test function for boundary vertex");
            continue;
        }
        CHECK(box_boundary_integral_of_flux(mesh, dual, zero, static_cast<int>(v)) == 0.0);
        CHECK(std::abs(box_boundary_integral_of_flux(mesh, dual, linear, static_cast<int>(v))) <= 1e-13);
    }
}

TEST_CASE("hat function flux against its own box equals the Galerkin diagonal")
{
    const auto mesh = generate_uniform(4);
    const auto dual = build_dual(mesh);
    const auto fem = assemble_stiffness_fem(mesh, Exec::Serial);
    const int v = interior_vertex_near(mesh, {0.0, 0.0});
    std::vector<double> hat(mesh.num_vertices(), 0.0);
    hat[v] = 1.0;
    const double flux = box_boundary_integral_of_flux(mesh, dual, p1_gradients(mesh, hat), v);
    CHECK(flux == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(flux == doctest::Approx(fem.at(v, v)).epsilon(1e-14));
}

TEST_CASE("flux identity: box flux of any hat equals the Galerkin entry")
{
    for (const auto& mesh : sample_meshes()) {
        const auto dual = build_dual(mesh);
        const auto fem = assemble_stiffness_fem(mesh, Exec::Serial);
        std::vector<double> hat(mesh.num_vertices(), 0.0);
        double worst = 0.0;
        for (std::size_t w = 0; w < mesh.num_vertices(); ++w) {
            hat[w] = 1.0;
            const auto grads = p1_gradients(mesh, hat);
            hat[w] = 0.0;
            // hat w only touches the boxes of its neighbours
            for (int t : mesh.incident(static_cast<int>(w)))
                for (int v : mesh.triangles()[t]) {
                    if (mesh.is_boundary_vertex(v))
                        continue;
                    const double flux = box_boundary_integral_of_flux(mesh, dual, grads, v);
                    worst = std::max(worst, std::abs(flux - fem.at(v, static_cast<int>(w))));
                }
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("box fluxes of a compactly supported field sum to zero")
{
    const auto mesh = sample_meshes()[2];
    const auto dual = build_dual(mesh);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> field(mesh.num_vertices(), 0.0);
    // random values on vertices away from the square boundary, zero on and next to it
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        const Point2 p = mesh.vertex(static_cast<int>(v));
        if (std::max(std::abs(p.x), std::abs(p.y)) < 0.7)
            field[v] = u(rng);
    }
    const auto grads = p1_gradients(mesh, field);
    double sum = 0.0;
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        if (!mesh.is_boundary_vertex(static_cast<int>(v)))
            sum += box_boundary_integral_of_flux(mesh, dual, grads, static_cast<int>(v));
    CHECK(std::abs(sum) <= 1e-12);
}
