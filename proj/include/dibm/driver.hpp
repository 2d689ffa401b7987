#pragma once

#include "dibm/assembly.hpp"
#include "dibm/cases.hpp"
#include "dibm/error_analysis.hpp"
#include "dibm/linalg.hpp"
#include "dibm/mesh.hpp"
#include "dibm/region.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dibm {

struct SolveOptions {
    double tol = 1e-10;
    int max_iterations = -1; // <= 0: 20 * sqrt(n)
    Exec exec = Exec::Parallel;
    ErrorRegion region = ErrorRegion::InsideD;
};

/// Raised when CG does not reach the tolerance; carries the solver report.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, SolveReport report)
        : std::runtime_error(what), report_(std::move(report))
    {
    }
    [[nodiscard]] const SolveReport& report() const { return report_; }

private:
    SolveReport report_;
};

struct DibmSolution {
    std::vector<double> field; // nodal values, tube vertices hold g_tilde_h
    RegionMap region;
    ErrorReport errors;
    SolveReport solve;
};

/// dual mesh -> classify(eps) -> box stiffness and load -> constraints
/// (g_tilde_h on the tube, outer datum on the square boundary) -> CG.
DibmSolution solve_dibm(const TriMesh& mesh, const AnalyticCase& problem, double eps,
                        const SolveOptions& options = {});

enum class LoadKind { Box, Galerkin };

/// Polygonal problem on the whole mesh: only the square boundary is
/// constrained (to problem.outer_value). Box and Galerkin variants share the
/// stiffness matrix and differ in the load vector.
std::vector<double> solve_polygonal(const TriMesh& mesh, const AnalyticCase& problem, LoadKind load,
                                    const SolveOptions& options = {});

enum class StudyKind { H, Eps, Refined };

struct StudyConfig {
    StudyKind kind = StudyKind::H;
    std::vector<int> n_list{36, 72, 144, 288};
    std::vector<double> eps_list; // default 2^-1 .. 2^-20
    double eps = 0x1p-20;         // fixed eps for the h and refined studies
    int n = 288;                  // fixed mesh for the eps study
    double band = -1.0;           // refined study; <= 0: eps + target
    double target_exponent = 2.0; // refined study target diameter (2/n)^exponent
    double eps_eoc_min = 0x1p-6;  // eps study reports rates only for eps >= this
    OuterCondition outer = OuterCondition::ExactTrace;
    SolveOptions solve;
    std::string vtk_prefix; // empty: no VTK output
};

struct StudyRow {
    double parameter = 0.0; // h (grid spacing) or eps
    int n = 0;
    std::size_t vertices = 0;
    ErrorReport errors;
    double eoc_l2 = std::numeric_limits<double>::quiet_NaN(); // rate from the previous row
    double eoc_h1 = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;
};

struct StudyTable {
    StudyKind kind = StudyKind::H;
    std::vector<StudyRow> rows;
};

StudyTable run_h_study(const StudyConfig& config);
StudyTable run_eps_study(const StudyConfig& config);
StudyTable run_refined_study(const StudyConfig& config);
StudyTable run_study(const StudyConfig& config);

/// Default eps list 2^-1 .. 2^-20.
std::vector<double> default_eps_list();

/// Header: <h|eps>,l2,eoc_l2,h1,eoc_h1,delta,kappa,dofs,iters
void write_csv(std::ostream& os, const StudyTable& table);

} // namespace dibm
