#include "rdad/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rdad/errors.hpp"
#include "rdad/parallel.hpp"

namespace rdad {

std::string filtration_kind_name(FiltrationKind kind) {
    switch (kind) {
        case FiltrationKind::Distance: return "distance";
        case FiltrationKind::Dtm: return "dtm";
        case FiltrationKind::Dad: return "dad";
        case FiltrationKind::Rdad: return "rdad";
    }
    return "rdad";
}

FiltrationKind parse_filtration_kind(const std::string& name) {
    if (name == "distance") return FiltrationKind::Distance;
    if (name == "dtm") return FiltrationKind::Dtm;
    if (name == "dad") return FiltrationKind::Dad;
    if (name == "rdad") return FiltrationKind::Rdad;
    throw ConfigError("unknown filtration kind: '" + name + "'");
}

int default_k_den(std::size_t n) {
    if (n < 2) throw ConfigError("default_k_den: need N >= 2");
    const double l = std::log10(static_cast<double>(n));
    return static_cast<int>(std::ceil(l * l));
}

int default_k_dtm(std::size_t n, double m_dtm) {
    if (m_dtm <= 0.0 || m_dtm >= 1.0) throw ConfigError("default_k_dtm: require 0 < m_dtm < 1");
    const int k = static_cast<int>(std::floor(m_dtm * static_cast<double>(n) + 0.5));
    return std::max(1, k);
}

int FiltrationSpec::resolve_k_den(std::size_t n) const {
    const int k = k_den > 0 ? k_den : default_k_den(n);
    if (k < 2 || static_cast<std::size_t>(k) > n)
        throw ConfigError("k_den out of range for N = " + std::to_string(n));
    return k;
}

int FiltrationSpec::resolve_k_dtm(std::size_t n) const {
    const int k = k_dtm > 0 ? k_dtm : default_k_dtm(n, m_dtm);
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw ConfigError("k_dtm out of range for N = " + std::to_string(n));
    return k;
}

std::int64_t GridSpec::cell_count() const {
    std::int64_t n = 1;
    for (std::int64_t c : counts) n *= c;
    return n;
}

void GridSpec::cell_center(std::int64_t flat, std::span<double> out) const {
    for (std::size_t a = 0; a < counts.size(); ++a) {
        const std::int64_t idx = flat % counts[a];
        flat /= counts[a];
        out[a] = lower[a] + (static_cast<double>(idx) + 0.5) * delta_x;
    }
}

void GridSpec::validate() const {
    if (counts.empty() || lower.size() != counts.size())
        throw ConfigError("grid: lower/counts dimension mismatch");
    if (delta_x <= 0.0) throw ConfigError("grid: delta_x must be > 0");
    for (std::int64_t c : counts)
        if (c < 1) throw ConfigError("grid: all cell counts must be >= 1");
}

double eval_dtm(const NeighborIndex& index, std::span<const double> x, int k_dtm) {
    thread_local std::vector<std::pair<double, int>> heap;
    index.knn(x, k_dtm, heap);
    if (k_dtm == 1) return std::sqrt(heap[0].first);
    double sum = 0.0;
    for (const auto& [d2, idx] : heap) sum += d2;
    return std::sqrt(sum / static_cast<double>(k_dtm));
}

double eval_distance(const NeighborIndex& index, std::span<const double> x) {
    return eval_dtm(index, x, 1);
}

namespace {

void check_profile(const NeighborIndex& index, const DensityProfile& profile) {
    if (profile.cloud_fingerprint != index.cloud_fingerprint() ||
        profile.kth_dist.size() != index.size())
        throw ConfigError("density profile was built from a different cloud than the index");
}

double rdad_from_sorted_ratio_sq(const DensityProfile& profile,
                                 std::span<const double> ratio_sq, int k_dtm) {
    if (k_dtm == 1) return profile.c_norm * std::sqrt(ratio_sq[0]);
    double sum = 0.0;
    for (double r : ratio_sq) sum += r;
    return profile.c_norm * std::sqrt(sum / static_cast<double>(k_dtm));
}

}  // namespace

double eval_rdad(const NeighborIndex& index, const DensityProfile& profile,
                 std::span<const double> x, int k_dtm) {
    check_profile(index, profile);
    thread_local std::vector<double> ratio_sq;
    index.weighted_knn(x, k_dtm, profile.inv_sq, profile.node_inv_sq_min, ratio_sq);
    return rdad_from_sorted_ratio_sq(profile, ratio_sq, k_dtm);
}

double eval_dad(const NeighborIndex& index, const DensityProfile& profile,
                std::span<const double> x) {
    return eval_rdad(index, profile, x, 1);
}

namespace detail {

double eval_rdad_scan(const NeighborIndex& index, const DensityProfile& profile,
                      std::span<const double> x, int k_dtm) {
    check_profile(index, profile);
    const std::size_t n = index.size();
    if (k_dtm < 1 || static_cast<std::size_t>(k_dtm) > n)
        throw ConfigError("eval_rdad_scan: k_dtm out of range");
    std::vector<double> ratio_sq(n);
    for (std::size_t i = 0; i < n; ++i)
        ratio_sq[i] = squared_distance(x, index.cloud().point(i)) * profile.inv_sq[i];
    std::nth_element(ratio_sq.begin(), ratio_sq.begin() + (k_dtm - 1), ratio_sq.end());
    ratio_sq.resize(static_cast<std::size_t>(k_dtm));
    std::sort(ratio_sq.begin(), ratio_sq.end());
    return rdad_from_sorted_ratio_sq(profile, ratio_sq, k_dtm);
}

}  // namespace detail

ScalarField build_field(const PointCloud& cloud, const FiltrationSpec& spec,
                        const GridSpec& grid, int threads) {
    cloud.validate();
    grid.validate();
    if (grid.dim() != cloud.dim)
        throw ConfigError("build_field: grid and cloud dimensions differ");

    NeighborIndex index(cloud);
    DensityProfile profile;
    if (spec.needs_density()) profile = density_profile(index, spec.resolve_k_den(cloud.size()));
    const int k_dtm = spec.needs_dtm() ? spec.resolve_k_dtm(cloud.size()) : 1;

    ScalarField field;
    field.grid = grid;
    field.spec = spec;
    field.spec.k_den = spec.needs_density() ? profile.k_den : 0;
    field.spec.k_dtm = spec.needs_dtm() ? k_dtm : 0;
    field.values.resize(static_cast<std::size_t>(grid.cell_count()));

    const int dim = grid.dim();
    parallel_for(grid.cell_count(), threads, [&](std::int64_t flat) {
        thread_local std::vector<double> center;
        center.resize(static_cast<std::size_t>(dim));
        std::span<double> c(center);
        grid.cell_center(flat, c);
        double v = 0.0;
        switch (spec.kind) {
            case FiltrationKind::Distance: v = eval_distance(index, c); break;
            case FiltrationKind::Dtm: v = eval_dtm(index, c, k_dtm); break;
            case FiltrationKind::Dad: v = eval_dad(index, profile, c); break;
            case FiltrationKind::Rdad: v = eval_rdad(index, profile, c, k_dtm); break;
        }
        field.values[static_cast<std::size_t>(flat)] = v;
    });
    return field;
}

GridSpec make_grid(const PointCloud& points, double delta_x, double padding_fraction) {
    points.validate();
    if (delta_x <= 0.0) throw ConfigError("make_grid: delta_x must be > 0");
    if (padding_fraction < 0.0) throw ConfigError("make_grid: padding_fraction must be >= 0");

    const int dim = points.dim;
    const std::size_t n = points.size();
    std::vector<double> lo(static_cast<std::size_t>(dim), std::numeric_limits<double>::infinity());
    std::vector<double> hi(static_cast<std::size_t>(dim), -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        auto p = points.point(i);
        for (int a = 0; a < dim; ++a) {
            lo[static_cast<std::size_t>(a)] = std::min(lo[static_cast<std::size_t>(a)], p[a]);
            hi[static_cast<std::size_t>(a)] = std::max(hi[static_cast<std::size_t>(a)], p[a]);
        }
    }

    GridSpec grid;
    grid.delta_x = delta_x;
    grid.lower.resize(static_cast<std::size_t>(dim));
    grid.counts.resize(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        const std::size_t ai = static_cast<std::size_t>(a);
        const double side = hi[ai] - lo[ai];
        if (side <= 0.0)
            throw DataError("make_grid: axis " + std::to_string(a) +
                            " has zero extent; pass an explicit GridSpec");
        const double pad = padding_fraction * side;
        grid.lower[ai] = lo[ai] - pad;
        grid.counts[ai] =
            static_cast<std::int64_t>(std::ceil((side + 2.0 * pad) / delta_x - 1e-12));
        grid.counts[ai] = std::max<std::int64_t>(1, grid.counts[ai]);
    }
    return grid;
}

GridSpec grid_from_rect(const Rect& rect, double delta_x) {
    if (delta_x <= 0.0) throw ConfigError("grid_from_rect: delta_x must be > 0");
    GridSpec grid;
    grid.delta_x = delta_x;
    grid.lower = {rect.xmin, rect.ymin};
    grid.counts = {static_cast<std::int64_t>(std::ceil(rect.width() / delta_x - 1e-12)),
                   static_cast<std::int64_t>(std::ceil(rect.height() / delta_x - 1e-12))};
    grid.counts[0] = std::max<std::int64_t>(1, grid.counts[0]);
    grid.counts[1] = std::max<std::int64_t>(1, grid.counts[1]);
    return grid;
}

}  // namespace rdad
