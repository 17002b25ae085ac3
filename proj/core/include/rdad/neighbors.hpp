#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rdad/point_cloud.hpp"

namespace rdad {

// Volume of the unit ball in R^D: pi^(D/2) / Gamma(D/2 + 1).
double unit_ball_volume(int dim);

// Exact k-nearest-neighbor index (kd-tree). Immutable after construction;
// concurrent read queries are safe. Ties among equidistant neighbors break
// by ascending point index, which affects returned indices only.
class NeighborIndex {
public:
    explicit NeighborIndex(PointCloud cloud);

    NeighborIndex(const NeighborIndex&) = delete;
    NeighborIndex& operator=(const NeighborIndex&) = delete;
    NeighborIndex(NeighborIndex&&) = default;
    NeighborIndex& operator=(NeighborIndex&&) = default;

    const PointCloud& cloud() const { return cloud_; }
    std::size_t size() const { return cloud_.size(); }
    int dim() const { return cloud_.dim; }
    std::uint64_t cloud_fingerprint() const { return fingerprint_; }

    // The k pairs (squared distance, point index) smallest in (distance,
    // index) lexicographic order, sorted ascending. k must be in [1, N].
    void knn(std::span<const double> query, int k,
             std::vector<std::pair<double, int>>& out) const;

    // k smallest values of squared_distance(query, X_i) * weight_sq[i],
    // sorted ascending. node_weight_min must come from subtree_min_weight
    // for the same weight array. Exact branch-and-bound selection.
    void weighted_knn(std::span<const double> query, int k,
                      std::span<const double> weight_sq,
                      std::span<const double> node_weight_min,
                      std::vector<double>& out) const;

    // Per-node minimum of `values` over the node's subtree (for the
    // weighted_knn pruning bound).
    std::vector<double> subtree_min_weight(std::span<const double> values) const;

private:
    struct Node {
        int left = -1;
        int right = -1;
        int begin = 0;
        int end = 0;
    };

    int build(int begin, int end, std::vector<double>& centroid_scratch);
    double min_squared_distance(int node, std::span<const double> query) const;

    PointCloud cloud_;
    std::uint64_t fingerprint_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> order_;           // permutation of point indices, leaf-contiguous
    std::vector<double> node_bounds_;  // per node: dim lows then dim highs
    int root_ = -1;

    friend class WeightedQueryPlan;
};

// Distance from x to its k-th nearest data point (k-th order statistic of
// the N distances). k in [1, N].
double kth_distance(const NeighborIndex& index, std::span<const double> x, int k);

// Nearest-neighbor density estimate (k/N) / (omega_D * d_k(x)^D). Throws
// DegenerateDistance when d_k(x) = 0.
double knn_density(const NeighborIndex& index, std::span<const double> x, int k);

// Per-point k_den-th neighbor distances (self included at rank 1) plus the
// normalizing constant C_{N,k_den,D} = (k_den / (N omega_D))^(1/D).
struct DensityProfile {
    int k_den = 0;
    std::vector<double> kth_dist;        // d_i
    std::vector<double> inv_sq;          // 1 / d_i^2
    double c_norm = 0.0;
    double omega_d = 0.0;
    std::uint64_t cloud_fingerprint = 0;
    std::vector<double> node_inv_sq_min;  // pruning bounds aligned with the index

    double max_inv() const;  // max_i 1/d_i
};

// Throws DuplicateOverload if any d_i = 0 (at least k_den coincident copies
// of some point). Requires 2 <= k_den <= N.
DensityProfile density_profile(const NeighborIndex& index, int k_den);

}  // namespace rdad
