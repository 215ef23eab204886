// Microbenchmarks for the hot paths: symbolic determinant ingredients,
// generator construction, wedge products, membership checks, q-series and
// exact rank computations.

#include <benchmark/benchmark.h>

#include <nrs/combinat.hpp>
#include <nrs/construct.hpp>
#include <nrs/nullres.hpp>
#include <nrs/polyring.hpp>
#include <nrs/qchar.hpp>

namespace {

void BM_delta_plus(benchmark::State& state) {
    const int nvars = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrs::delta_plus(nvars));
    }
}
BENCHMARK(BM_delta_plus)->Arg(4)->Arg(6)->Arg(8);

void BM_generator_xi(benchmark::State& state) {
    const int nvars = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrs::gen_xi(nvars, 1));
    }
}
BENCHMARK(BM_generator_xi)->Arg(4)->Arg(6)->Arg(8);

void BM_wedge_square(benchmark::State& state) {
    const int nvars = static_cast<int>(state.range(0));
    const nrs::WedgeElement v = nrs::gen_v(nvars, 1);
    const nrs::WedgeElement xi = nrs::gen_xi(nvars, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(v.wedge(xi));
    }
}
BENCHMARK(BM_wedge_square)->Arg(4)->Arg(6);

void BM_membership(benchmark::State& state) {
    const int nvars = static_cast<int>(state.range(0));
    const nrs::WedgeElement elem = nrs::gen_v(nvars, 1).wedge(
        nrs::gen_w(nvars, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrs::in_U(elem));
    }
}
BENCHMARK(BM_membership)->Arg(4)->Arg(6);

void BM_qbinom(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrs::qbinom(30, 15));
    }
}
BENCHMARK(BM_qbinom);

void BM_ch_U(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrs::ch_U(6, 3, 60));
    }
}
BENCHMARK(BM_ch_U);

void BM_span_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrs::span_rank(n, n));
    }
}
BENCHMARK(BM_span_rank)->Arg(3)->Arg(4);

void BM_det_randomized(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrs::det_identity_check(
            4, 2, nrs::DetMode::Randomized, 2, 7));
    }
}
BENCHMARK(BM_det_randomized);

}  // namespace

BENCHMARK_MAIN();
