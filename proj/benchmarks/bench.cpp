#include "sph/catalog.hpp"
#include "sph/fano.hpp"

#include <benchmark/benchmark.h>

using namespace sph;

static void BM_ComputeGroupEmbeddingA(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto sk = mark(parse_family_spec("2:A" + std::to_string(n)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(compute_p_unchecked(sk));
}
BENCHMARK(BM_ComputeGroupEmbeddingA)->DenseRange(2, 8, 2);

static void BM_ComputeE8(benchmark::State& state) {
    const auto sk = mark(parse_family_spec("2:E8"), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_p_unchecked(sk));
}
BENCHMARK(BM_ComputeE8)->Arg(1)->Arg(8);

static void BM_Validate(benchmark::State& state) {
    const auto sk = mark(parse_family_spec("2:E8"), 1);
    for (auto _ : state) benchmark::DoNotOptimize(validate(sk));
}
BENCHMARK(BM_Validate);

static void BM_Isomorphic(benchmark::State& state) {
    const auto spec = parse_family_spec("2:D4");
    const auto a = mark(spec, 1), b = mark(spec, 3);
    for (auto _ : state) benchmark::DoNotOptimize(isomorphic(a, b));
}
BENCHMARK(BM_Isomorphic);

static void BM_VerifyTables(benchmark::State& state) {
    const auto rank = static_cast<std::size_t>(state.range(0));
    const auto jobs = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(verify_tables(rank, jobs));
}
BENCHMARK(BM_VerifyTables)->Args({4, 1})->Args({8, 1})->Args({8, 0})->Unit(benchmark::kMillisecond);

static void BM_VertexEnumerateCube(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    HPolytope p{d, {}};
    for (std::size_t i = 0; i < d; ++i) {
        p.rows.push_back({unit(d, i), -1});
        p.rows.push_back({scale(-1, unit(d, i)), -1});
    }
    for (auto _ : state) benchmark::DoNotOptimize(vertex_enumerate(p));
}
BENCHMARK(BM_VertexEnumerateCube)->DenseRange(2, 5);

static void BM_FanoWorkedExample(benchmark::State& state) {
    RootSystem rs = RootSystem::parse("A1");
    AugmentedData a;
    a.skeleton = make_skeleton(rs, {*recognize(rs, {1})}, {}, {}, {{"D3", {0}}, {"D4", {-1}}});
    a.lattice_rank = 2;
    a.sigma_in_M = {{1, 1}};
    a.rho_prime = {{1, 0}, {0, 1}, {-1, 1}, {0, -1}};
    a.m = {1, 1, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(mukai_check(make_fano(a)));
}
BENCHMARK(BM_FanoWorkedExample);

BENCHMARK_MAIN();
