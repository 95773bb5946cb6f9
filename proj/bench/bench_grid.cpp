#include "levy/grid.hpp"
#include "levy/optimize.hpp"

#include <benchmark/benchmark.h>

using namespace levy;

static grid::Exec exec_of(const benchmark::State& st)
{
    return st.range(0) == 0 ? grid::Exec::Serial : grid::Exec::Parallel;
}

static void BM_sweep_E2(benchmark::State& st)
{
    const auto s = grid::linspace(0.501, 0.999, 4001);
    const ScenarioParams p{1e8, 1.0};
    for (auto _ : st)
        benchmark::DoNotOptimize(grid::sweep_values({Family::E, 2}, p, s, exec_of(st)));
}
BENCHMARK(BM_sweep_E2)->Arg(0)->Arg(1)->ArgName("parallel");

static void BM_kernel_grid(benchmark::State& st)
{
    std::vector<KernelPoint> pts;
    for (int i = 0; i < 64; ++i)
        pts.push_back({0.5 * i, 1.0, FractionalExponent(0.75), 1.0});
    for (auto _ : st)
        benchmark::DoNotOptimize(grid::kernel_values(pts, QuadratureSpec{}, exec_of(st)));
}
BENCHMARK(BM_kernel_grid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_critical_points_G3(benchmark::State& st)
{
    SolverSpec spec;
    spec.exec = exec_of(st);
    for (auto _ : st)
        benchmark::DoNotOptimize(find_critical_points({Family::G, 3}, {1.0, 1e6}, spec));
}
BENCHMARK(BM_critical_points_G3)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_lattice_physical(benchmark::State& st)
{
    QuadratureSpec q;
    for (auto _ : st)
        benchmark::DoNotOptimize(grid::lattice_physical_sum(FractionalExponent(0.75), 10.0, 1.0, 500, q, exec_of(st)));
}
BENCHMARK(BM_lattice_physical)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
