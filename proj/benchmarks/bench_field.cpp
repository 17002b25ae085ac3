#include <benchmark/benchmark.h>

#include "rdad/filtration.hpp"
#include "rdad/presets.hpp"
#include "rdad/synthgen.hpp"

namespace {

using namespace rdad;

PointCloud antman_cloud() {
    Rng rng(1);
    return gen_two_square(std::get<TwoSquareParams>(find_preset("antman").generator), rng);
}

void BM_RdadPointEval(benchmark::State& state) {
    const PointCloud cloud = antman_cloud();
    NeighborIndex index(cloud);
    const auto profile = density_profile(index, default_k_den(cloud.size()));
    const int k = static_cast<int>(state.range(0));
    Rng rng(2);
    std::vector<std::array<double, 2>> queries(1024);
    for (auto& q : queries) q = {rng.uniform(-1.5, 5.5), rng.uniform(-1.5, 1.5)};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_rdad(index, profile, queries[i++ & 1023], k));
    }
}
BENCHMARK(BM_RdadPointEval)->Arg(1)->Arg(10)->Arg(50);

void BM_RdadPointEvalScan(benchmark::State& state) {
    const PointCloud cloud = antman_cloud();
    NeighborIndex index(cloud);
    const auto profile = density_profile(index, default_k_den(cloud.size()));
    Rng rng(2);
    std::vector<std::array<double, 2>> queries(1024);
    for (auto& q : queries) q = {rng.uniform(-1.5, 5.5), rng.uniform(-1.5, 1.5)};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::eval_rdad_scan(index, profile, queries[i++ & 1023], 10));
    }
}
BENCHMARK(BM_RdadPointEvalScan);

void BM_RdadField(benchmark::State& state) {
    const PointCloud cloud = antman_cloud();
    FiltrationSpec spec;
    spec.kind = FiltrationKind::Rdad;
    const GridSpec grid = make_grid(cloud, 1.0 / static_cast<double>(state.range(0)), 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_field(cloud, spec, grid, 1));
    }
    state.counters["cells"] = static_cast<double>(grid.cell_count());
}
BENCHMARK(BM_RdadField)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
