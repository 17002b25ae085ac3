#include "rdad/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rdad/errors.hpp"

namespace rdad {

namespace {

constexpr int kLeafSize = 16;

// Max-heap order: the worst candidate (largest distance, then largest index)
// sits on top.
struct HeapLess {
    bool operator()(const std::pair<double, int>& a, const std::pair<double, int>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

}  // namespace

double unit_ball_volume(int dim) {
    if (dim < 1) throw ConfigError("unit_ball_volume: dimension must be >= 1");
    const double pi = 3.14159265358979323846;
    return std::pow(pi, dim / 2.0) / std::tgamma(dim / 2.0 + 1.0);
}

NeighborIndex::NeighborIndex(PointCloud cloud) : cloud_(std::move(cloud)) {
    cloud_.validate();
    fingerprint_ = cloud_.fingerprint();
    const int n = static_cast<int>(cloud_.size());
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    nodes_.reserve(static_cast<std::size_t>(2 * n / kLeafSize + 2));
    std::vector<double> scratch;
    root_ = build(0, n, scratch);
}

int NeighborIndex::build(int begin, int end, std::vector<double>& scratch) {
    const int dim = cloud_.dim;
    const int node_id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{-1, -1, begin, end});
    node_bounds_.resize(node_bounds_.size() + 2 * static_cast<std::size_t>(dim));

    double* lo = &node_bounds_[static_cast<std::size_t>(node_id) * 2 * dim];
    double* hi = lo + dim;
    for (int a = 0; a < dim; ++a) {
        lo[a] = std::numeric_limits<double>::infinity();
        hi[a] = -std::numeric_limits<double>::infinity();
    }
    for (int i = begin; i < end; ++i) {
        auto p = cloud_.point(static_cast<std::size_t>(order_[i]));
        for (int a = 0; a < dim; ++a) {
            lo[a] = std::min(lo[a], p[a]);
            hi[a] = std::max(hi[a], p[a]);
        }
    }

    if (end - begin <= kLeafSize) return node_id;

    int axis = 0;
    double extent = -1.0;
    for (int a = 0; a < dim; ++a) {
        const double e = hi[a] - lo[a];
        if (e > extent) {
            extent = e;
            axis = a;
        }
    }
    if (extent <= 0.0) return node_id;  // all points coincide

    const int mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](int a, int b) {
                         const double ca = cloud_.coords[static_cast<std::size_t>(a) * dim + axis];
                         const double cb = cloud_.coords[static_cast<std::size_t>(b) * dim + axis];
                         if (ca != cb) return ca < cb;
                         return a < b;
                     });

    // children are appended after this node, so record ids post-recursion
    const int left = build(begin, mid, scratch);
    const int right = build(mid, end, scratch);
    nodes_[static_cast<std::size_t>(node_id)].left = left;
    nodes_[static_cast<std::size_t>(node_id)].right = right;
    return node_id;
}

double NeighborIndex::min_squared_distance(int node, std::span<const double> query) const {
    const int dim = cloud_.dim;
    const double* lo = &node_bounds_[static_cast<std::size_t>(node) * 2 * dim];
    const double* hi = lo + dim;
    double s = 0.0;
    for (int a = 0; a < dim; ++a) {
        double d = 0.0;
        if (query[a] < lo[a])
            d = lo[a] - query[a];
        else if (query[a] > hi[a])
            d = query[a] - hi[a];
        s += d * d;
    }
    return s;
}

void NeighborIndex::knn(std::span<const double> query, int k,
                        std::vector<std::pair<double, int>>& out) const {
    const int n = static_cast<int>(cloud_.size());
    if (k < 1 || k > n) throw ConfigError("knn: k out of range");
    out.clear();
    out.reserve(static_cast<std::size_t>(k));

    const HeapLess less;
    auto worst = [&]() -> const std::pair<double, int>& { return out.front(); };

    auto visit = [&](auto&& self, int node_id) -> void {
        const Node& node = nodes_[static_cast<std::size_t>(node_id)];
        if (node.left < 0) {
            for (int i = node.begin; i < node.end; ++i) {
                const int idx = order_[i];
                const double d2 = squared_distance(query, cloud_.point(static_cast<std::size_t>(idx)));
                const std::pair<double, int> cand{d2, idx};
                if (static_cast<int>(out.size()) < k) {
                    out.push_back(cand);
                    std::push_heap(out.begin(), out.end(), less);
                } else if (less(cand, worst())) {
                    std::pop_heap(out.begin(), out.end(), less);
                    out.back() = cand;
                    std::push_heap(out.begin(), out.end(), less);
                }
            }
            return;
        }
        const double dl = min_squared_distance(node.left, query);
        const double dr = min_squared_distance(node.right, query);
        const int first = dl <= dr ? node.left : node.right;
        const int second = dl <= dr ? node.right : node.left;
        const double dfirst = std::min(dl, dr);
        const double dsecond = std::max(dl, dr);
        if (static_cast<int>(out.size()) < k || dfirst <= worst().first) self(self, first);
        if (static_cast<int>(out.size()) < k || dsecond <= worst().first) self(self, second);
    };
    visit(visit, root_);

    std::sort(out.begin(), out.end(), less);
}

void NeighborIndex::weighted_knn(std::span<const double> query, int k,
                                 std::span<const double> weight_sq,
                                 std::span<const double> node_weight_min,
                                 std::vector<double>& out) const {
    const int n = static_cast<int>(cloud_.size());
    if (k < 1 || k > n) throw ConfigError("weighted_knn: k out of range");
    out.clear();
    out.reserve(static_cast<std::size_t>(k));

    auto visit = [&](auto&& self, int node_id) -> void {
        const Node& node = nodes_[static_cast<std::size_t>(node_id)];
        if (node.left < 0) {
            for (int i = node.begin; i < node.end; ++i) {
                const int idx = order_[i];
                const double v =
                    squared_distance(query, cloud_.point(static_cast<std::size_t>(idx))) *
                    weight_sq[static_cast<std::size_t>(idx)];
                if (static_cast<int>(out.size()) < k) {
                    out.push_back(v);
                    std::push_heap(out.begin(), out.end());
                } else if (v < out.front()) {
                    std::pop_heap(out.begin(), out.end());
                    out.back() = v;
                    std::push_heap(out.begin(), out.end());
                }
            }
            return;
        }
        const double bl = min_squared_distance(node.left, query) *
                          node_weight_min[static_cast<std::size_t>(node.left)];
        const double br = min_squared_distance(node.right, query) *
                          node_weight_min[static_cast<std::size_t>(node.right)];
        const int first = bl <= br ? node.left : node.right;
        const int second = bl <= br ? node.right : node.left;
        const double bfirst = std::min(bl, br);
        const double bsecond = std::max(bl, br);
        if (static_cast<int>(out.size()) < k || bfirst <= out.front()) self(self, first);
        if (static_cast<int>(out.size()) < k || bsecond <= out.front()) self(self, second);
    };
    visit(visit, root_);

    std::sort(out.begin(), out.end());
}

std::vector<double> NeighborIndex::subtree_min_weight(std::span<const double> values) const {
    std::vector<double> result(nodes_.size(), std::numeric_limits<double>::infinity());
    // children always have larger ids than their parent, so one reverse pass
    // folds leaves up into internal nodes
    for (int id = static_cast<int>(nodes_.size()) - 1; id >= 0; --id) {
        const Node& node = nodes_[static_cast<std::size_t>(id)];
        double m = std::numeric_limits<double>::infinity();
        if (node.left < 0) {
            for (int i = node.begin; i < node.end; ++i)
                m = std::min(m, values[static_cast<std::size_t>(order_[i])]);
        } else {
            m = std::min(result[static_cast<std::size_t>(node.left)],
                         result[static_cast<std::size_t>(node.right)]);
        }
        result[static_cast<std::size_t>(id)] = m;
    }
    return result;
}

double kth_distance(const NeighborIndex& index, std::span<const double> x, int k) {
    thread_local std::vector<std::pair<double, int>> heap;
    index.knn(x, k, heap);
    return std::sqrt(heap.back().first);
}

double knn_density(const NeighborIndex& index, std::span<const double> x, int k) {
    const double dk = kth_distance(index, x, k);
    if (dk == 0.0)
        throw DegenerateDistance("knn_density: query coincides with at least k data points");
    const int d = index.dim();
    const double n = static_cast<double>(index.size());
    return (static_cast<double>(k) / n) / (unit_ball_volume(d) * std::pow(dk, d));
}

DensityProfile density_profile(const NeighborIndex& index, int k_den) {
    const int n = static_cast<int>(index.size());
    if (k_den < 2 || k_den > n) throw ConfigError("density_profile: require 2 <= k_den <= N");

    DensityProfile profile;
    profile.k_den = k_den;
    profile.kth_dist.resize(static_cast<std::size_t>(n));
    profile.inv_sq.resize(static_cast<std::size_t>(n));
    profile.omega_d = unit_ball_volume(index.dim());
    profile.c_norm = std::pow(static_cast<double>(k_den) / (n * profile.omega_d),
                              1.0 / index.dim());
    profile.cloud_fingerprint = index.cloud_fingerprint();

    std::vector<std::pair<double, int>> heap;
    for (int i = 0; i < n; ++i) {
        index.knn(index.cloud().point(static_cast<std::size_t>(i)), k_den, heap);
        const double d2 = heap.back().first;
        if (d2 == 0.0)
            throw DuplicateOverload("density_profile: point " + std::to_string(i) +
                                    " has at least k_den coincident copies");
        const double d = std::sqrt(d2);
        profile.kth_dist[static_cast<std::size_t>(i)] = d;
        profile.inv_sq[static_cast<std::size_t>(i)] = 1.0 / d2;
    }
    profile.node_inv_sq_min = index.subtree_min_weight(profile.inv_sq);
    return profile;
}

double DensityProfile::max_inv() const {
    double m = 0.0;
    for (double d : kth_dist) m = std::max(m, 1.0 / d);
    return m;
}

}  // namespace rdad
