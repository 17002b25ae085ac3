#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rdad/point_cloud.hpp"
#include "rdad/rng.hpp"

namespace rdad {

// Square annulus {max(|x - cx|, |y - cy|) in [r, R]}; radii are half side
// lengths of the inner and outer squares.
struct SquareAnnulus {
    std::array<double, 2> center{0.0, 0.0};
    double inner_radius = 0.0;
    double outer_radius = 0.0;
};

struct TwoSquareParams {
    std::vector<SquareAnnulus> annuli;
    std::vector<double> masses;        // sums to 1
    std::vector<double> noise_sigma;   // empty, or per-annulus Gaussian sigma
    int n_outliers = 0;                // points replaced by uniform outliers
    std::size_t n_points = 0;
};

struct VoronoiParams {
    int n_sites = 200;                 // cells in the full diagram (M+_cell)
    std::size_t n_super = 20000;       // super-sample size (N+)
    double outlier_fraction = 0.002;   // share of the super-sample replaced
    double scale_lambda = 1.0;         // biexponential scale for site x
    double strip_half_height = 2.0;    // site |y| bound (y+)
    double sigma0 = 0.01;              // base additive noise scale
    Rect crop{-3.0, 3.0, -1.0, 1.0};   // retained rectangle R
};

// n points area-uniform on the square annulus (sampled via the exact
// four-rectangle decomposition, no rejection).
PointCloud sample_square_annulus(const SquareAnnulus& annulus, std::size_t n, Rng& rng);

// Multinomial split of N across the annuli, per-annulus uniform sampling,
// optional per-annulus isotropic Gaussian noise, then n_outliers points
// replaced by uniform draws on the padded bounding box of the clean cloud.
PointCloud gen_two_square(const TwoSquareParams& params, Rng& rng);

// Appends n_out uniform points on `region`, labeled outlier.
PointCloud add_outliers(const PointCloud& cloud, std::size_t n_out, const Rect& region, Rng& rng);

// Sites with biexponential x and uniform y on the strip; cells clipped to the
// site bounding box widened by 4*lambda in x; points drawn cell-uniform then
// perimeter-uniform; Gaussian noise sigma0 * exp(|x|/lambda) at the pre-noise
// x; floor(outlier_fraction * N+) points replaced by uniforms in the crop
// rectangle; finally cropped to it.
PointCloud gen_voronoi(const VoronoiParams& params, Rng& rng);

// Deterministic multinomial counts (categorical draws, one per trial).
std::vector<std::size_t> multinomial_counts(std::size_t n, const std::vector<double>& probs,
                                            Rng& rng);

}  // namespace rdad
