#include <benchmark/benchmark.h>

#include <random>

#include "padhaus/operators.hpp"
#include "padhaus/spaces.hpp"
#include "padhaus/verify.hpp"
#include "padhaus/weights.hpp"

using namespace padhaus;

namespace {

SeparableFunction sample_window(int p, int len) {
    std::mt19937_64 rng(1234);
    std::vector<LogScalar> vals;
    for (int i = 0; i < len; ++i)
        vals.push_back(LogScalar::from_real((rng() >> 11) * 0x1.0p-53, p));
    return {RadialProfile::finite_window(-len / 2, len - len / 2 - 1, vals),
            AngularFactor::constant(1.0)};
}

void BM_GeometricTailSum(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(geometric_tail_sum(2, 1.375, 7));
}
BENCHMARK(BM_GeometricTailSum);

void BM_CentralMorreyWindow(benchmark::State& state) {
    const auto f = sample_window(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(central_morrey_norm(2, 1, f, 2.0, -0.25, {0.5}));
}
BENCHMARK(BM_CentralMorreyWindow)->Arg(8)->Arg(32)->Arg(128);

void BM_MorreyHerzExtremal(benchmark::State& state) {
    const auto f = make_morrey_herz_extremal(1, 0.2, 2.0, 0.5, 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(morrey_herz_norm(2, 1, f, 2.0, 0.2, 2.0, 0.3, {0.5}));
}
BENCHMARK(BM_MorreyHerzExtremal);

void BM_ApplyOperator(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<SeparableFunction> fs;
    for (int i = 0; i < m; ++i)
        fs.push_back(sample_window(2, 16));
    const PhiKernel phi = PhiKernel::finite({{-2, 0.25}, {0, 1.0}, {1, 0.5}, {3, 0.125}});
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_hausdorff(2, 1, phi, AngularFactor::constant(1.0), fs));
}
BENCHMARK(BM_ApplyOperator)->Arg(1)->Arg(2)->Arg(3);

void BM_CommutatorLogSymbols(benchmark::State& state) {
    std::vector<SeparableFunction> fs{sample_window(2, 16), sample_window(2, 16)};
    std::vector<SeparableFunction> bs{make_log_symbol(), make_log_symbol()};
    const PhiKernel phi = PhiKernel::finite({{-2, 0.25}, {0, 1.0}, {1, 0.5}});
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_commutator(2, 1, phi, AngularFactor::constant(1.0), bs, fs));
}
BENCHMARK(BM_CommutatorLogSymbols);

void BM_OscillationNorm(benchmark::State& state) {
    const auto b = make_log_symbol();
    for (auto _ : state)
        benchmark::DoNotOptimize(cmo_norm(2, 1, b, 2.0, {0.5}));
}
BENCHMARK(BM_OscillationNorm);

void BM_CosetEnumeration(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(unit_sphere_cosets(3, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CosetEnumeration)->Arg(1)->Arg(2)->Arg(3);

void BM_SufficiencyDraw(benchmark::State& state) {
    Scenario s;
    s.id = "bench";
    s.theorem = TheoremId::T31;
    s.mode = ScenarioMode::Sufficiency;
    s.p = 2;
    s.n = 1;
    s.m = 2;
    s.q_i = {4.0, 4.0};
    s.alpha_i = {0.5, 1.0};
    s.lambda_i = {-0.1, -0.05};
    s.phi = PhiKernel::finite({{-1, 0.3}, {0, 1.0}, {2, 0.4}});
    s = s.derived();
    s.draws = static_cast<int>(state.range(0));
    RunOptions opts;
    opts.seed = 99;
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_sufficiency(s, opts));
}
BENCHMARK(BM_SufficiencyDraw)->Arg(10)->Arg(50);

} // namespace

BENCHMARK_MAIN();
