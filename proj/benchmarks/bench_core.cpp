/// @file bench_core.cpp
/// Microbenchmarks over the hot paths: the Schouten bracket, the gauge
/// action, exact elimination, quotient-complex assembly, and a full solve.
/// Inputs are fixed (no randomness) so numbers are comparable across runs.

#include <benchmark/benchmark.h>

#include <mcgauge/cohomology.hpp>
#include <mcgauge/glagroup.hpp>
#include <mcgauge/linalg.hpp>
#include <mcgauge/multivec.hpp>
#include <mcgauge/solver.hpp>

namespace {

using namespace mcgauge;

SuperPoly mono(const SpaceModel& sp, long num, long den, std::vector<std::int32_t> even,
               std::vector<int> odd) {
    return SuperPoly::monomial(sp, make_scalar(num, den), std::move(even), odd);
}

/// A dense-ish bivector on the 3-dimensional normal model.
MultiVec dense_bivector(int jet_order) {
    const SpaceModel sp{0, 3};
    SuperPoly body(sp);
    for (int a = 0; a <= jet_order; ++a)
        for (int b = 0; a + b <= jet_order; ++b)
            for (int c = 0; a + b + c <= jet_order; ++c) {
                if (a + b + c == 0) continue;
                const std::vector<std::int32_t> even{a, b, c};
                body = body + mono(sp, (a + 2 * b + 3 * c) % 5 - 2, 1 + (a + b + c) % 2, even,
                                   {1 + (a + b) % 3, 1 + (1 + a + b + (a + b) % 2) % 3});
            }
    return MultiVec(sp, jet_order, 2, body);
}

MultiVec gauge_log(int jet_order) {
    const SpaceModel sp{0, 3};
    return MultiVec(sp, jet_order, 1,
                    mono(sp, 1, 1, {2, 0, 0}, {2}) + mono(sp, -2, 1, {0, 1, 1}, {1}) +
                        mono(sp, 1, 3, {0, 0, 3}, {3}) + mono(sp, -1, 2, {1, 1, 1}, {2}));
}

void bm_schouten(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const MultiVec a = dense_bivector(N);
    const MultiVec b = gauge_log(N);
    for (auto _ : state) benchmark::DoNotOptimize(schouten(a, b));
}
BENCHMARK(bm_schouten)->Arg(4)->Arg(6)->Arg(8);

void bm_exp_ad(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const MultiVec gamma = lie_poisson(LieAlgebraData::so3(), N);
    const GaugeElement g = make_gauge_element(gauge_log(N));
    for (auto _ : state) benchmark::DoNotOptimize(exp_ad(g, gamma));
}
BENCHMARK(bm_exp_ad)->Arg(4)->Arg(6)->Arg(8);

void bm_bch(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const GaugeElement x = make_gauge_element(gauge_log(N));
    const GaugeElement y = make_gauge_element(
        MultiVec(SpaceModel{0, 3}, N, 1,
                 mono(SpaceModel{0, 3}, 1, 1, {0, 2, 0}, {3}) +
                     mono(SpaceModel{0, 3}, 1, 2, {1, 0, 1}, {1})));
    for (auto _ : state) benchmark::DoNotOptimize(bch(x, y));
}
BENCHMARK(bm_bch)->Arg(4)->Arg(6);

void bm_row_reduce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Matrix m(n, n + 8);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n + 8; ++j)
            m.at(i, j) = make_scalar((i * 7 + j * 3) % 11 - 5, 1 + (i + j) % 3);
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m));
}
BENCHMARK(bm_row_reduce)->Arg(16)->Arg(48)->Arg(96);

void bm_quotient_assembly(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const MultiVec gamma = lie_poisson(LieAlgebraData::so3(), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_quotient_complex(gamma, level, {0, 0, 0, 0}));
}
BENCHMARK(bm_quotient_assembly)->Arg(1)->Arg(3)->Arg(5);

void bm_solve_roundtrip(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const MultiVec gamma = lie_poisson(LieAlgebraData::so3(), N);
    const MCElement target = make_mc_element(gamma);
    const MCElement start = make_mc_element(exp_ad(gauge_log(N), gamma));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_equivalence(target, start, std::nullopt));
}
BENCHMARK(bm_solve_roundtrip)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
