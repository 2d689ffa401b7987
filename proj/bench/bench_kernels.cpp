// Serial reference vs OpenMP kernels on the n = 288 grid.
#include "dibm/assembly.hpp"
#include "dibm/dual_mesh.hpp"
#include "dibm/error_analysis.hpp"
#include "dibm/linalg.hpp"

#include <benchmark/benchmark.h>

using namespace dibm;

namespace {

struct Fixture {
    TriMesh mesh = generate_uniform(288);
    DualMesh dual = build_dual(mesh);
    AnalyticCase problem = circle_interface_case();
    SparseMatrix matrix = assemble_stiffness_box(mesh, dual);
    std::vector<double> field = interpolate(problem.extension_g_tilde, mesh);
    RegionMap region = classify(mesh, problem.domain, 0x1p-20);
};

const Fixture& fixture()
{
    static const Fixture f;
    return f;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_Matvec(benchmark::State& state)
{
    const auto& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(matvec(f.matrix, f.field, exec_of(state)));
    label(state);
}

void BM_StiffnessFem(benchmark::State& state)
{
    const auto& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_stiffness_fem(f.mesh, exec_of(state)));
    label(state);
}

void BM_StiffnessBox(benchmark::State& state)
{
    const auto& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_stiffness_box(f.mesh, f.dual, exec_of(state)));
    label(state);
}

void BM_LoadBox(benchmark::State& state)
{
    const auto& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_load_box(f.mesh, f.dual, f.problem.source_f, exec_of(state)));
    label(state);
}

void BM_Errors(benchmark::State& state)
{
    const auto& f = fixture();
    ErrorOptions options;
    options.exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            compute_errors(f.mesh, f.field, f.problem, ErrorRegion::InsideD, f.region, options));
    label(state);
}

} // namespace

BENCHMARK(BM_Matvec)->Arg(0)->Arg(1);
BENCHMARK(BM_StiffnessFem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StiffnessBox)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LoadBox)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Errors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
