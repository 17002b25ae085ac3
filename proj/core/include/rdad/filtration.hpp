#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdad/neighbors.hpp"
#include "rdad/point_cloud.hpp"

namespace rdad {

enum class FiltrationKind { Distance, Dtm, Dad, Rdad };

std::string filtration_kind_name(FiltrationKind kind);
FiltrationKind parse_filtration_kind(const std::string& name);

// Default k_den rule: ceil((log10 N)^2).
int default_k_den(std::size_t n);

// Default k_dtm rule: max(1, round-half-up(m_dtm * N)).
int default_k_dtm(std::size_t n, double m_dtm);

struct FiltrationSpec {
    FiltrationKind kind = FiltrationKind::Rdad;
    int k_dtm = 0;         // 0: derive from m_dtm
    int k_den = 0;         // 0: derive from N
    double m_dtm = 0.002;

    bool needs_density() const {
        return kind == FiltrationKind::Dad || kind == FiltrationKind::Rdad;
    }
    bool needs_dtm() const {
        return kind == FiltrationKind::Dtm || kind == FiltrationKind::Rdad;
    }
    int resolve_k_den(std::size_t n) const;
    int resolve_k_dtm(std::size_t n) const;
};

// Axis-aligned uniform grid. Cell (i,j) has its center at
// lower + ((i+0.5) dx, (j+0.5) dx). Values are stored with axis 0 fastest:
// linear index = j * counts[0] + i.
struct GridSpec {
    std::vector<double> lower;
    double delta_x = 0.0;
    std::vector<std::int64_t> counts;

    int dim() const { return static_cast<int>(counts.size()); }
    std::int64_t cell_count() const;
    std::int64_t linear_index(std::int64_t i, std::int64_t j) const {
        return j * counts[0] + i;
    }
    void cell_center(std::int64_t flat, std::span<double> out) const;
    double center_coord(int axis, std::int64_t idx) const {
        return lower[static_cast<std::size_t>(axis)] + (static_cast<double>(idx) + 0.5) * delta_x;
    }
    void validate() const;
    bool operator==(const GridSpec&) const = default;
};

struct ScalarField {
    GridSpec grid;
    std::vector<double> values;
    FiltrationSpec spec;

    double at(std::int64_t i, std::int64_t j) const {
        return values[static_cast<std::size_t>(grid.linear_index(i, j))];
    }
};

// Root-mean-square of the k_dtm smallest distances from x to the data.
double eval_dtm(const NeighborIndex& index, std::span<const double> x, int k_dtm);

// Distance to the point set (= eval_dtm with k_dtm = 1).
double eval_distance(const NeighborIndex& index, std::span<const double> x);

// c_norm times the RMS of the k_dtm smallest ratios d(x, X_i) / d_i. The
// order statistics are taken over the ratios, not the raw distances.
double eval_rdad(const NeighborIndex& index, const DensityProfile& profile,
                 std::span<const double> x, int k_dtm);

// min_i c_norm d(x, X_i) / d_i (= eval_rdad with k_dtm = 1).
double eval_dad(const NeighborIndex& index, const DensityProfile& profile,
                std::span<const double> x);

namespace detail {
// Reference route: evaluates all N ratios and partially selects the k_dtm
// smallest with nth_element. Same arithmetic as eval_rdad.
double eval_rdad_scan(const NeighborIndex& index, const DensityProfile& profile,
                      std::span<const double> x, int k_dtm);
}  // namespace detail

// Evaluates the chosen filtration at every cell center. Deterministic given
// inputs; parallel evaluation is bitwise identical to serial.
ScalarField build_field(const PointCloud& cloud, const FiltrationSpec& spec,
                        const GridSpec& grid, int threads = 0);

// Bounding box of the points, each side expanded by padding_fraction of its
// length, discretized into ceil(side / delta_x) cells per axis. Throws
// DataError on a zero-extent axis (an explicit GridSpec is required then).
GridSpec make_grid(const PointCloud& points, double delta_x, double padding_fraction);

GridSpec grid_from_rect(const Rect& rect, double delta_x);

}  // namespace rdad
