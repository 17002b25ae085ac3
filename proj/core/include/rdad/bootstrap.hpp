#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rdad/diagram.hpp"
#include "rdad/filtration.hpp"
#include "rdad/point_cloud.hpp"
#include "rdad/rng.hpp"

namespace rdad {

enum class BootstrapMode { Subsample, Oracle };

struct BootstrapConfig {
    int B = 100;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    BootstrapMode mode = BootstrapMode::Subsample;
    int dim = 1;  // homology dimension compared by bottleneck distance
};

// Filtration + fixed evaluation grid + coefficient field. Every replicate
// field is evaluated on this same grid so bottleneck comparisons are not
// confounded by grid changes.
struct FieldPipeline {
    FiltrationSpec filtration;
    GridSpec grid;
    int field_char = 11;
};

struct BootstrapResult {
    double radius = 0.0;
    std::vector<double> distances;  // per replicate, replicate order
    BootstrapConfig config;
    int reseeded_replicates = 0;
    PersistenceDiagram empirical;   // diagram of the observed sample
};

// Ceiling empirical quantile: the order statistic with 1-based index
// ceil((1 - alpha) * B).
double quantile_radius(std::vector<double> distances, double alpha);

// B replicates, each resampling N points with replacement from `cloud` with
// a per-replicate seed derived from cfg.seed; the density profile and field
// are rebuilt per replicate on pipeline.grid; distance b is the bottleneck
// distance between the empirical and replicate dimension-cfg.dim diagrams.
// Replicates that hit DuplicateOverload are re-drawn with a fresh sub-seed.
BootstrapResult subsample_bootstrap(const PointCloud& cloud, const FieldPipeline& pipeline,
                                    const BootstrapConfig& cfg, int threads = 0);

// As subsample_bootstrap, but replicates are fresh draws from `sampler`
// (which carries the generator's fixed parameters and corruption mechanism).
using DatasetSampler = std::function<PointCloud(Rng&)>;
BootstrapResult oracle_bootstrap(const PointCloud& cloud, const DatasetSampler& sampler,
                                 const FieldPipeline& pipeline, const BootstrapConfig& cfg,
                                 int threads = 0);

}  // namespace rdad
