#include <random>

#include <benchmark/benchmark.h>

#include "r13lab/korn_verifier.hpp"
#include "r13lab/model_params.hpp"
#include "r13lab/slab_solver.hpp"

using namespace r13;

namespace {

MolecularModel eta7() { return load_model_file(std::string(R13LAB_DATA_DIR) + "/models/eta7.json"); }

void BM_AssembleForms(benchmark::State& state)
{
    const MolecularModel m = eta7();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const SlabAssembly as = make_assembly(m, 0.1, SlabMesh{n, 2}, SlabLayout::nonmaxwell);
        benchmark::DoNotOptimize(as.forms.mass.nonZeros());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_AssembleForms)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oN);

void BM_SteadyCouette(benchmark::State& state)
{
    SteadyProblem p;
    p.model = eta7();
    p.mesh = SlabMesh{static_cast<int>(state.range(0)), 2};
    p.wall = WallData::couette(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(solve_steady(p).monitors.energy);
}
BENCHMARK(BM_SteadyCouette)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_TransientStep(benchmark::State& state)
{
    const SlabAssembly as = make_assembly(eta7(), 0.1, SlabMesh{static_cast<int>(state.range(0)), 2},
                                          SlabLayout::nonmaxwell);
    const TransientStepper st(as, 0.01, TimeScheme::implicit_euler);
    std::mt19937_64 rng(1);
    Eigen::VectorXd U = random_dofs(as.space, rng);
    for (auto _ : state) {
        U = st.step(U);
        benchmark::DoNotOptimize(U.data());
    }
}
BENCHMARK(BM_TransientStep)->RangeMultiplier(4)->Range(16, 1024);

void BM_CubeForms(benchmark::State& state)
{
    const CubeMesh mesh(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(assemble_cube_forms(mesh).stf.sum());
}
BENCHMARK(BM_CubeForms)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
