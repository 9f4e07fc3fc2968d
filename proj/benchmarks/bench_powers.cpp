#include <benchmark/benchmark.h>

#include "vekua/bvp.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/meridional.hpp"

using namespace vekua;

static void BM_XSequenceBuild(benchmark::State& state) {
    const RadialProfile p = RadialProfile::exponential(1.0, 1.0, 0.0, 5.0);
    const auto grid = XSequence::make_grid(0.5, 2.5, 1.0, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        XSequence xs(p, 1.0, grid, 8);
        benchmark::DoNotOptimize(xs.X(8, 2.2));
    }
}
BENCHMARK(BM_XSequenceBuild)->Arg(128)->Arg(512)->Arg(2048);

static void BM_FormalPowerPath(benchmark::State& state) {
    const RadialProfile p = RadialProfile::exponential(1.0, 1.0, 0.0, 5.0);
    const GeneratingSequence seq = transverse_sequence(p);
    const Complex z0{2, 0}, z{1.3, 1.1};
    const int n_max = static_cast<int>(state.range(0));
    const PathSpec path = log_polar_path(z0, z);
    for (auto _ : state) {
        FormalPowerPath build(seq, z0, n_max, path);
        benchmark::DoNotOptimize(build.at_end(n_max, Coeff::One));
    }
}
BENCHMARK(BM_FormalPowerPath)->Arg(2)->Arg(8)->Arg(16);

static void BM_BvpSolveDisk(benchmark::State& state) {
    const double beta = std::sqrt(2.0) - 1.0;
    auto exact = [beta](Complex z) {
        return std::pow(std::abs(z), beta) * std::cos(std::arg(z));
    };
    BvpProblem prob;
    prob.kind = BvpCase::Transverse;
    prob.domain = Domain::disk({2, 0}, 0.75);
    prob.profile = RadialProfile::power(1.0, 2.0, 0.5, 5.0);
    prob.z0 = {2, 0};
    prob.n_max = static_cast<int>(state.range(0));
    prob.boundary =
        sample_boundary(prob.domain, default_collocation_count(prob.n_max), exact);
    for (auto _ : state) {
        const auto basis = make_basis(prob);
        const BvpSolution sol = solve(prob, *basis);
        benchmark::DoNotOptimize(sol.boundary_residual_max);
    }
}
BENCHMARK(BM_BvpSolveDisk)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
