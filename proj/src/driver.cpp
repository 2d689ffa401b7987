#include "dibm/driver.hpp"

#include "dibm/dual_mesh.hpp"
#include "dibm/io.hpp"

#include <cmath>
#include <iomanip>

namespace dibm {

namespace {

std::vector<double> solve_or_throw(const SparseSystem& system, const SolveOptions& options, SolveReport& report)
{
    CgOptions cg;
    cg.tol = options.tol;
    cg.max_iterations = options.max_iterations;
    cg.exec = options.exec;
    auto [x, rep] = cg_solve(system.matrix, system.rhs, cg);
    report = rep;
    if (!rep.converged)
        throw SolverFailure("CG did not converge: relative residual " + format_real(rep.relative_residual) +
                                " after " + std::to_string(rep.iterations) + " iterations",
                            rep);
    // constrained values are data, not iterates
    for (std::size_t v = 0; v < x.size(); ++v)
        if (system.constraints[v])
            x[v] = *system.constraints[v];
    return x;
}

void dump_vtk(const std::string& prefix, std::size_t row, const TriMesh& mesh, const AnalyticCase& problem,
              const DibmSolution& sol)
{
    std::vector<double> exact = interpolate(problem.exact_u, mesh);
    std::vector<double> error(exact.size());
    std::vector<double> vertex_tag(exact.size());
    for (std::size_t v = 0; v < exact.size(); ++v) {
        error[v] = sol.field[v] - exact[v];
        vertex_tag[v] = static_cast<double>(sol.region.vertex_tag[v]);
    }
    std::vector<double> triangle_tag(mesh.num_triangles());
    for (std::size_t t = 0; t < triangle_tag.size(); ++t)
        triangle_tag[t] = static_cast<double>(sol.region.triangle_tag[t]);

    const std::string stem = prefix + "_" + std::to_string(row);
    write_vtk(stem + ".vtk", mesh,
              {{"u_h", sol.field}, {"u_exact", exact}, {"error", error}, {"vertex_tag", vertex_tag}},
              {{"triangle_tag", triangle_tag}});
    write_dual_vtk(stem + "_dual.vtk", build_dual(mesh), {{"u_h", sol.field}, {"vertex_tag", vertex_tag}});
}

StudyRow make_row(double parameter, int n, const TriMesh& mesh, const DibmSolution& sol)
{
    StudyRow row;
    row.parameter = parameter;
    row.n = n;
    row.vertices = mesh.num_vertices();
    row.errors = sol.errors;
    row.iterations = sol.solve.iterations;
    return row;
}

void fill_rates(StudyTable& table, double min_parameter)
{
    auto& rows = table.rows;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k].parameter < min_parameter || rows[k - 1].parameter < min_parameter)
            continue;
        const std::pair<double, double> l2[] = {{rows[k - 1].parameter, rows[k - 1].errors.l2},
                                                {rows[k].parameter, rows[k].errors.l2}};
        const std::pair<double, double> h1[] = {{rows[k - 1].parameter, rows[k - 1].errors.h1_semi},
                                                {rows[k].parameter, rows[k].errors.h1_semi}};
        rows[k].eoc_l2 = eoc(l2).front();
        rows[k].eoc_h1 = eoc(h1).front();
    }
}

} // namespace

DibmSolution solve_dibm(const TriMesh& mesh, const AnalyticCase& problem, double eps, const SolveOptions& options)
{
    const Exec exec = options.exec;
    const DualMesh dual = build_dual(mesh);

    DibmSolution sol;
    sol.region = classify(mesh, problem.domain, eps, exec);
    auto matrix = assemble_stiffness_box(mesh, dual, exec);
    auto rhs = assemble_load_box(mesh, dual, problem.source_f, exec);
    const auto g_tilde_h = interpolate(problem.extension_g_tilde, mesh);
    const auto outer = interpolate(problem.outer_value, mesh);
    const auto system = apply_constraints(std::move(matrix), std::move(rhs), sol.region, g_tilde_h, outer);

    sol.field = solve_or_throw(system, options, sol.solve);
    ErrorOptions err;
    err.exec = exec;
    sol.errors = compute_errors(mesh, sol.field, problem, options.region, sol.region, err);
    return sol;
}

std::vector<double> solve_polygonal(const TriMesh& mesh, const AnalyticCase& problem, LoadKind load,
                                    const SolveOptions& options)
{
    const Exec exec = options.exec;
    const DualMesh dual = build_dual(mesh);
    auto matrix = assemble_stiffness_box(mesh, dual, exec);
    auto rhs = load == LoadKind::Box ? assemble_load_box(mesh, dual, problem.source_f, exec)
                                     : assemble_load_fem(mesh, problem.source_f, exec);
    const auto outer = interpolate(problem.outer_value, mesh);
    const auto system = apply_outer_constraints(std::move(matrix), std::move(rhs), mesh, outer);
    SolveReport report;
    return solve_or_throw(system, options, report);
}

std::vector<double> default_eps_list()
{
    std::vector<double> list;
    for (int i = -1; i >= -20; --i)
        list.push_back(std::ldexp(1.0, i));
    return list;
}

StudyTable run_h_study(const StudyConfig& config)
{
    const AnalyticCase problem = circle_interface_case(config.outer);
    StudyTable table{StudyKind::H, {}};
    for (std::size_t k = 0; k < config.n_list.size(); ++k) {
        const int n = config.n_list[k];
        const TriMesh mesh = generate_uniform(n);
        const auto sol = solve_dibm(mesh, problem, config.eps, config.solve);
        table.rows.push_back(make_row(*mesh.grid_spacing, n, mesh, sol));
        if (!config.vtk_prefix.empty())
            dump_vtk(config.vtk_prefix, k, mesh, problem, sol);
    }
    fill_rates(table, 0.0);
    return table;
}

StudyTable run_eps_study(const StudyConfig& config)
{
    const AnalyticCase problem = circle_interface_case(config.outer);
    const auto eps_list = config.eps_list.empty() ? default_eps_list() : config.eps_list;
    const TriMesh mesh = generate_uniform(config.n);
    StudyTable table{StudyKind::Eps, {}};
    for (std::size_t k = 0; k < eps_list.size(); ++k) {
        const auto sol = solve_dibm(mesh, problem, eps_list[k], config.solve);
        table.rows.push_back(make_row(eps_list[k], config.n, mesh, sol));
        if (!config.vtk_prefix.empty())
            dump_vtk(config.vtk_prefix, k, mesh, problem, sol);
    }
    fill_rates(table, config.eps_eoc_min);
    return table;
}

StudyTable run_refined_study(const StudyConfig& config)
{
    const AnalyticCase problem = circle_interface_case(config.outer);
    StudyTable table{StudyKind::Refined, {}};
    for (std::size_t k = 0; k < config.n_list.size(); ++k) {
        const int n = config.n_list[k];
        const double spacing = 2.0 / n;
        const double target = std::pow(spacing, config.target_exponent);
        const double band = config.band > 0.0 ? config.band : config.eps + target;
        const TriMesh mesh = refine_near_interface(generate_uniform(n), problem.domain, band, target);
        const auto sol = solve_dibm(mesh, problem, config.eps, config.solve);
        table.rows.push_back(make_row(spacing, n, mesh, sol));
        if (!config.vtk_prefix.empty())
            dump_vtk(config.vtk_prefix, k, mesh, problem, sol);
    }
    fill_rates(table, 0.0);
    return table;
}

StudyTable run_study(const StudyConfig& config)
{
    switch (config.kind) {
    case StudyKind::H: return run_h_study(config);
    case StudyKind::Eps: return run_eps_study(config);
    case StudyKind::Refined: return run_refined_study(config);
    }
    return {};
}

void write_csv(std::ostream& os, const StudyTable& table)
{
    os << (table.kind == StudyKind::Eps ? "eps" : "h") << ",l2,eoc_l2,h1,eoc_h1,delta,kappa,dofs,iters\r\n";
    for (const auto& row : table.rows) {
        os << format_real(row.parameter) << ',' << format_real(row.errors.l2) << ',' << format_real(row.eoc_l2)
           << ',' << format_real(row.errors.h1_semi) << ',' << format_real(row.eoc_h1) << ','
           << format_real(row.errors.delta) << ',' << format_real(row.errors.kappa) << ',' << row.errors.dofs
           << ',' << row.iterations << "\r\n";
    }
}

} // namespace dibm
