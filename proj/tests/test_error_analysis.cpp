#include "dibm/assembly.hpp"
#include "dibm/error_analysis.hpp"

#include <doctest.h>

#include <cmath>

using namespace dibm;

namespace {

AnalyticCase linear_case()
{
    AnalyticCase c = polygonal_outer_branch_case();
    c.exact_u = [](const Point2& p) { return 1.0 + 2.0 * p.x - 3.0 * p.y; };
    c.exact_grad = [](const Point2&) { return Point2{2.0, -3.0}; };
    return c;
}

} // namespace

TEST_CASE("eoc examples")
{
    const std::vector<std::pair<double, double>> quad{{0.1, 1e-2}, {0.05, 2.5e-3}};
    CHECK(eoc(quad).at(0) == doctest::Approx(2.0).epsilon(1e-12));
    const std::vector<std::pair<double, double>> lin{{0.1, 1e-1}, {0.05, 5e-2}, {0.025, 2.5e-2}};
    const auto rates = eoc(lin);
    REQUIRE(rates.size() == 2);
    CHECK(rates[0] == doctest::Approx(1.0));
    CHECK(rates[1] == doctest::Approx(1.0));
    const std::vector<std::pair<double, double>> half{{0.4, 2.0}, {0.1, 1.0}};
    CHECK(eoc(half).at(0) == doctest::Approx(0.5));
    CHECK(eoc(std::vector<std::pair<double, double>>{{0.1, 1.0}}).empty());
}

TEST_CASE("eoc rejects invalid data")
{
    const std::vector<std::pair<double, double>> zero{{0.1, 0.0}, {0.05, 1.0}};
    CHECK_THROWS_AS(eoc(zero), std::invalid_argument);
    const std::vector<std::pair<double, double>> same{{0.1, 1.0}, {0.1, 0.5}};
    CHECK_THROWS_AS(eoc(same), std::invalid_argument);
}

TEST_CASE("error region names")
{
    for (auto r : {ErrorRegion::All, ErrorRegion::InsideD, ErrorRegion::OutsideD, ErrorRegion::FreeOnly})
        CHECK(parse_error_region(to_string(r)) == r);
    CHECK(parse_error_region("inside") == ErrorRegion::InsideD);
    CHECK_THROWS(parse_error_region("bogus"));
}

TEST_CASE("interpolant of a linear function has zero error")
{
    const auto mesh = generate_uniform(7);
    const auto c = linear_case();
    const auto field = interpolate(c.exact_u, mesh);
    const auto map = classify(mesh, c.domain, 0.0);
    const auto rep = compute_errors(mesh, field, c, ErrorRegion::All, map);
    CHECK(rep.l2 <= 1e-13);
    CHECK(rep.h1_semi <= 1e-12);
    CHECK(rep.dofs == map.free_vertex_count());
}

TEST_CASE("interpolation errors of the smooth outer branch converge at the optimal rates")
{
    const auto c = polygonal_outer_branch_case();
    std::vector<std::pair<double, double>> l2;
    std::vector<std::pair<double, double>> h1;
    for (int n : {8, 16, 32, 64}) {
        const auto mesh = generate_uniform(n);
        const auto map = classify(mesh, c.domain, 0.0);
        const auto rep = compute_errors(mesh, interpolate(c.exact_u, mesh), c, ErrorRegion::All, map);
        l2.emplace_back(2.0 / n, rep.l2);
        h1.emplace_back(2.0 / n, rep.h1_semi);
        CHECK(rep.h1_full == doctest::Approx(std::hypot(rep.l2, rep.h1_semi)));
    }
    CHECK(eoc(l2).back() >= 1.9);
    CHECK(eoc(h1).back() >= 0.95);
}

TEST_CASE("subdivided quadrature changes the errors by less than 1%")
{
    const auto mesh = generate_uniform(72);
    const auto c = circle_interface_case();
    const auto map = classify(mesh, c.domain, 0x1p-20);
    const auto field = interpolate(c.extension_g_tilde, mesh);
    ErrorOptions fine;
    fine.subdivisions = 2;
    for (auto region : {ErrorRegion::All, ErrorRegion::InsideD}) {
        const auto a = compute_errors(mesh, field, c, region, map);
        const auto b = compute_errors(mesh, field, c, region, map, fine);
        CHECK(std::abs(a.l2 - b.l2) <= 0.01 * b.l2);
        CHECK(std::abs(a.h1_semi - b.h1_semi) <= 0.01 * b.h1_semi);
    }
}

TEST_CASE("inside and outside errors add up to the total")
{
    const auto mesh = generate_uniform(24);
    const auto c = circle_interface_case();
    const auto map = classify(mesh, c.domain, 0.05);
    const auto field = interpolate(c.extension_g_tilde, mesh);
    const auto all = compute_errors(mesh, field, c, ErrorRegion::All, map);
    const auto in = compute_errors(mesh, field, c, ErrorRegion::InsideD, map);
    const auto out = compute_errors(mesh, field, c, ErrorRegion::OutsideD, map);
    CHECK(all.l2 * all.l2 == doctest::Approx(in.l2 * in.l2 + out.l2 * out.l2).epsilon(1e-12));
    CHECK(all.h1_semi * all.h1_semi ==
          doctest::Approx(in.h1_semi * in.h1_semi + out.h1_semi * out.h1_semi).epsilon(1e-12));
    const auto free = compute_errors(mesh, field, c, ErrorRegion::FreeOnly, map);
    CHECK(free.l2 <= all.l2);
    CHECK(all.delta == map.delta);
    CHECK(all.kappa == map.kappa);
    CHECK(all.epsilon == 0.05);
}

TEST_CASE("serial and parallel error evaluation are bitwise identical")
{
    const auto mesh = generate_uniform(40);
    const auto c = circle_interface_case();
    const auto map = classify(mesh, c.domain, 0.01);
    const auto field = interpolate(c.extension_g_tilde, mesh);
    ErrorOptions serial;
    serial.exec = Exec::Serial;
    const auto a = compute_errors(mesh, field, c, ErrorRegion::InsideD, map, serial);
    const auto b = compute_errors(mesh, field, c, ErrorRegion::InsideD, map);
    CHECK(a.l2 == b.l2);
    CHECK(a.h1_semi == b.h1_semi);
}

TEST_CASE("field difference norms")
{
    const auto mesh = generate_uniform(10);
    const auto a = interpolate([](const Point2& p) { return p.x; }, mesh);
    const auto b = interpolate([](const Point2& p) { return p.x + 0.5; }, mesh);
    const auto [l2, h1] = field_difference_norms(mesh, a, b);
    CHECK(l2 == doctest::Approx(0.5 * 2.0).epsilon(1e-13)); // 0.5 * sqrt(area 4)
    CHECK(h1 <= 1e-13);
    const auto c = interpolate([](const Point2& p) { return 2.0 * p.y; }, mesh);
    CHECK(field_difference_norms(mesh, c, std::vector<double>(c.size(), 0.0)).second ==
          doctest::Approx(4.0).epsilon(1e-13)); // |grad| = 2 over area 4
}
