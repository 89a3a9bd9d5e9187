#include <heatcouple/linalg.hpp>
#include <heatcouple/schemes.hpp>
#include <heatcouple/simulation.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace heatcouple;

namespace {

// Diffusion-like system: diagonal 1 + 2r, off-diagonals -r.
TridiagonalSystem diffusion_system(std::size_t m, double r) {
    return TridiagonalSystem(std::vector<double>(m - 1, -r), std::vector<double>(m, 1.0 + 2.0 * r),
                             std::vector<double>(m - 1, -r));
}

void BM_Thomas(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto sys = diffusion_system(m, 4.0);
    const std::vector<double> b(m, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(thomas_solve(sys, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Thomas)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_BiCGStab(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto sys = diffusion_system(m, 4.0);
    const std::vector<double> b(m, 1.0), x0(m, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(bicgstab_solve(sys, b, x0, 1e-7));
}
BENCHMARK(BM_BiCGStab)->RangeMultiplier(4)->Range(64, 4096);

struct ReferenceStep {
    SimulationConfig config{};
    Grid1D grid{config.nodes};
    StepParams params = make_step_params(config, grid);
    TemperatureField field = initialize_field(config, grid);
};

void BM_StepFull(benchmark::State& state) {
    const ReferenceStep s;
    for (auto _ : state) benchmark::DoNotOptimize(step_full(s.field, s.params, s.config.solver));
}
BENCHMARK(BM_StepFull);

void BM_StepExplicitSequential(benchmark::State& state) {
    const ReferenceStep s;
    for (auto _ : state) benchmark::DoNotOptimize(step_explicit_sequential(s.field, s.params, s.config.solver));
}
BENCHMARK(BM_StepExplicitSequential);

void BM_StepImplicitSequential(benchmark::State& state) {
    const ReferenceStep s;
    for (auto _ : state) benchmark::DoNotOptimize(step_implicit_sequential(s.field, s.params, s.config.solver));
}
BENCHMARK(BM_StepImplicitSequential);

void BM_ReferenceRun(benchmark::State& state) {
    SimulationConfig c;
    c.scheme = static_cast<Scheme>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_simulation(c));
    state.SetLabel(std::string(to_string(c.scheme)));
}
BENCHMARK(BM_ReferenceRun)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
