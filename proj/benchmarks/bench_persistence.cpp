#include <benchmark/benchmark.h>

#include "rdad/cubical.hpp"
#include "rdad/rng.hpp"

namespace {

using namespace rdad;

ScalarField random_field(std::int64_t nx, std::int64_t ny, std::uint64_t seed) {
    ScalarField field;
    field.grid.lower = {0.0, 0.0};
    field.grid.delta_x = 1.0;
    field.grid.counts = {nx, ny};
    field.values.resize(static_cast<std::size_t>(nx * ny));
    Rng rng(seed);
    // smooth-ish bumps so the diagram has realistic structure
    for (std::int64_t j = 0; j < ny; ++j)
        for (std::int64_t i = 0; i < nx; ++i)
            field.values[static_cast<std::size_t>(j * nx + i)] =
                std::sin(0.21 * static_cast<double>(i)) * std::cos(0.17 * static_cast<double>(j)) +
                0.05 * rng.uniform();
    return field;
}

void BM_BuildComplex(benchmark::State& state) {
    const auto field = random_field(state.range(0), state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(build_complex(field));
}
BENCHMARK(BM_BuildComplex)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_PersistenceFull(benchmark::State& state) {
    const auto cx = build_complex(random_field(state.range(0), state.range(0), 3));
    for (auto _ : state) benchmark::DoNotOptimize(persistence(cx, 11));
}
BENCHMARK(BM_PersistenceFull)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_PersistenceDim1(benchmark::State& state) {
    const auto cx = build_complex(random_field(state.range(0), state.range(0), 3));
    for (auto _ : state) benchmark::DoNotOptimize(persistence(cx, 11, kDim1));
}
BENCHMARK(BM_PersistenceDim1)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace
