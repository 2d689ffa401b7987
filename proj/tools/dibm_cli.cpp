// Convergence studies for the diffuse interface box method on the
// unit-circle test problem. Writes a CSV table (stdout or --csv-out).

#include "dibm/driver.hpp"
#include "dibm/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv)
{
    CLI::App app{"Diffuse interface box method: convergence studies"};

    std::string study = "h";
    std::vector<int> n_list;
    std::vector<double> eps_list;
    double eps = 0x1p-20;
    int n = 288;
    double tol = 1e-10;
    int max_iterations = -1;
    double band = -1.0;
    std::string region = "inside";
    std::string vtk_out;
    std::string csv_out;
    bool literal_outer_zero = false;
    bool single_thread = false;

    app.add_option("--study", study, "Study kind")->check(CLI::IsMember({"h", "eps", "refined"}));
    app.add_option("--n-list", n_list, "Grid resolutions (n x n squares) for the h and refined studies")
        ->delimiter(',');
    app.add_option("--eps-list", eps_list, "Interface widths for the eps study (default 2^-1..2^-20)")
        ->delimiter(',');
    app.add_option("--eps", eps, "Fixed interface width for the h and refined studies");
    app.add_option("--n", n, "Fixed grid resolution for the eps study");
    app.add_option("--tol", tol, "CG relative residual tolerance");
    app.add_option("--max-iterations", max_iterations, "CG iteration cap (default 20 sqrt(N))");
    app.add_option("--band", band, "Refinement band half-width (default eps + target)");
    app.add_option("--region", region, "Triangles included in the error norms")
        ->check(CLI::IsMember({"all", "inside", "outside", "free"}));
    app.add_option("--vtk-out", vtk_out, "Prefix for per-row VTK dumps");
    app.add_option("--csv-out", csv_out, "CSV output path (default stdout)");
    app.add_flag("--literal-outer-zero", literal_outer_zero, "Impose u = 0 on the square boundary");
    app.add_flag("--single-thread", single_thread, "Serial reference kernels (byte-reproducible output)");

    CLI11_PARSE(app, argc, argv);

    dibm::StudyConfig config;
    config.kind = study == "h" ? dibm::StudyKind::H
                  : study == "eps" ? dibm::StudyKind::Eps
                                   : dibm::StudyKind::Refined;
    if (!n_list.empty())
        config.n_list = n_list;
    else if (config.kind == dibm::StudyKind::Refined)
        config.n_list = {36, 72, 144};
    config.eps_list = eps_list;
    config.eps = eps;
    config.n = n;
    config.band = band;
    config.outer = literal_outer_zero ? dibm::OuterCondition::LiteralZero : dibm::OuterCondition::ExactTrace;
    config.solve.tol = tol;
    config.solve.max_iterations = max_iterations;
    config.solve.region = dibm::parse_error_region(region);
    config.solve.exec = single_thread ? dibm::Exec::Serial : dibm::Exec::Parallel;
    config.vtk_prefix = vtk_out;
#ifdef _OPENMP
    if (single_thread)
        omp_set_num_threads(1);
#endif

    try {
        const auto table = dibm::run_study(config);
        if (csv_out.empty()) {
            dibm::write_csv(std::cout, table);
        } else {
            std::ofstream os(csv_out, std::ios::binary);
            if (!os) {
                std::cerr << "cannot open " << csv_out << '\n';
                return 2;
            }
            dibm::write_csv(os, table);
        }
    } catch (const dibm::SolverFailure& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
