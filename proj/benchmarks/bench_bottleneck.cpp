#include <benchmark/benchmark.h>

#include "rdad/bottleneck.hpp"
#include "rdad/rng.hpp"

namespace {

using namespace rdad;

PersistenceDiagram random_diagram(std::size_t n, std::uint64_t seed) {
    PersistenceDiagram d;
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        PersistencePoint p;
        p.dim = 1;
        p.birth = rng.uniform(0.0, 4.0);
        // mostly near-diagonal points plus a few prominent ones
        const double pers = rng.uniform() < 0.95 ? rng.uniform(0.0, 0.1) : rng.uniform(0.5, 3.0);
        p.death = p.birth + pers;
        d.points.push_back(p);
    }
    return d;
}

void BM_Bottleneck(benchmark::State& state) {
    const auto p = random_diagram(static_cast<std::size_t>(state.range(0)), 7);
    const auto q = random_diagram(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(bottleneck(p, q, 1));
}
BENCHMARK(BM_Bottleneck)->Arg(50)->Arg(500)->Arg(2000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
