#include "rdad/bootstrap.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "rdad/bottleneck.hpp"
#include "rdad/cubical.hpp"
#include "rdad/errors.hpp"
#include "rdad/parallel.hpp"

namespace rdad {

namespace {

constexpr int kMaxRedraws = 64;

void check_config(const BootstrapConfig& cfg) {
    if (cfg.B < 1) throw ConfigError("bootstrap: B must be >= 1");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ConfigError("bootstrap: require 0 < alpha < 1");
    if (cfg.dim != 0 && cfg.dim != 1) throw ConfigError("bootstrap: dim must be 0 or 1");
}

PersistenceDiagram diagram_of(const PointCloud& cloud, const FieldPipeline& pipe, int dim,
                              int threads) {
    const ScalarField field = build_field(cloud, pipe.filtration, pipe.grid, threads);
    return persistence(build_complex(field), pipe.field_char, dim == 0 ? kDim0 : kDim1);
}

PointCloud resample_with_replacement(const PointCloud& cloud, Rng& rng) {
    const std::size_t n = cloud.size();
    PointCloud out;
    out.dim = cloud.dim;
    out.coords.reserve(cloud.coords.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t pick = rng.below(n);
        auto p = cloud.point(pick);
        out.coords.insert(out.coords.end(), p.begin(), p.end());
    }
    return out;
}

BootstrapResult run_bootstrap(const PointCloud& cloud, const FieldPipeline& pipe,
                              const BootstrapConfig& cfg, int threads,
                              const std::function<PointCloud(Rng&)>& draw_replicate) {
    check_config(cfg);
    cloud.validate();
    pipe.grid.validate();

    BootstrapResult result;
    result.config = cfg;
    result.empirical = diagram_of(cloud, pipe, cfg.dim, threads);
    result.distances.assign(static_cast<std::size_t>(cfg.B), 0.0);

    std::atomic<int> reseeded{0};

    // replicate seeds come from the replicate index, never from scheduling,
    // so parallel runs match serial runs bitwise
    parallel_for(cfg.B, threads, [&](std::int64_t b) {
        const std::uint64_t replicate_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(b));
        PersistenceDiagram replicate;
        bool redrawn = false;
        for (int attempt = 0;; ++attempt) {
            const std::uint64_t attempt_seed =
                attempt == 0 ? replicate_seed
                             : derive_seed(replicate_seed, static_cast<std::uint64_t>(attempt));
            Rng rng(attempt_seed);
            try {
                const PointCloud sample = draw_replicate(rng);
                // field evaluation threads: replicates already saturate the pool
                const ScalarField field = build_field(sample, pipe.filtration, pipe.grid, 1);
                replicate = persistence(build_complex(field), pipe.field_char,
                                        cfg.dim == 0 ? kDim0 : kDim1);
                break;
            } catch (const DuplicateOverload&) {
                if (attempt + 1 >= kMaxRedraws) throw;
                redrawn = true;
            }
        }
        if (redrawn) reseeded.fetch_add(1, std::memory_order_relaxed);
        result.distances[static_cast<std::size_t>(b)] =
            bottleneck(result.empirical, replicate, cfg.dim);
    });

    result.reseeded_replicates = reseeded.load();
    result.radius = quantile_radius(result.distances, cfg.alpha);
    return result;
}

}  // namespace

double quantile_radius(std::vector<double> distances, double alpha) {
    if (distances.empty()) throw ConfigError("quantile_radius: no distances");
    std::sort(distances.begin(), distances.end());
    const double b = static_cast<double>(distances.size());
    auto rank = static_cast<std::size_t>(std::ceil((1.0 - alpha) * b));
    rank = std::clamp<std::size_t>(rank, 1, distances.size());
    return distances[rank - 1];
}

BootstrapResult subsample_bootstrap(const PointCloud& cloud, const FieldPipeline& pipeline,
                                    const BootstrapConfig& cfg, int threads) {
    if (cfg.mode != BootstrapMode::Subsample)
        throw ConfigError("subsample_bootstrap: cfg.mode must be subsample");
    return run_bootstrap(cloud, pipeline, cfg, threads,
                         [&cloud](Rng& rng) { return resample_with_replacement(cloud, rng); });
}

BootstrapResult oracle_bootstrap(const PointCloud& cloud, const DatasetSampler& sampler,
                                 const FieldPipeline& pipeline, const BootstrapConfig& cfg,
                                 int threads) {
    if (cfg.mode != BootstrapMode::Oracle)
        throw ConfigError("oracle_bootstrap: cfg.mode must be oracle");
    if (!sampler) throw ConfigError("oracle_bootstrap: sampler is empty");
    return run_bootstrap(cloud, pipeline, cfg, threads, sampler);
}

}  // namespace rdad
