#include "rdad/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rdad/errors.hpp"
#include "rdad/voronoi.hpp"

namespace rdad {

std::vector<std::size_t> multinomial_counts(std::size_t n, const std::vector<double>& probs,
                                            Rng& rng) {
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    std::vector<std::size_t> counts(probs.size(), 0);
    for (std::size_t t = 0; t < n; ++t) {
        const double u = rng.uniform() * cumulative.back();
        const std::size_t g = static_cast<std::size_t>(
            std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        ++counts[std::min(g, counts.size() - 1)];
    }
    return counts;
}

PointCloud sample_square_annulus(const SquareAnnulus& annulus, std::size_t n, Rng& rng) {
    const double r = annulus.inner_radius;
    const double R = annulus.outer_radius;
    if (!(r > 0.0) || !(R > r))
        throw ConfigError("sample_square_annulus: require 0 < inner < outer radius");

    // four rectangles: top and bottom bands (full width), left and right
    // bands (between them); areas 2R(R-r) and 2r(R-r)
    const double band = R - r;
    const double area_tb = 2.0 * R * band;
    const double area_lr = 2.0 * r * band;
    const double total = 2.0 * (area_tb + area_lr);

    PointCloud cloud;
    cloud.dim = 2;
    cloud.coords.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform() * total;
        double x, y;
        if (u < area_tb) {  // top
            x = rng.uniform(-R, R);
            y = rng.uniform(r, R);
        } else if (u < 2.0 * area_tb) {  // bottom
            x = rng.uniform(-R, R);
            y = rng.uniform(-R, -r);
        } else if (u < 2.0 * area_tb + area_lr) {  // left
            x = rng.uniform(-R, -r);
            y = rng.uniform(-r, r);
        } else {  // right
            x = rng.uniform(r, R);
            y = rng.uniform(-r, r);
        }
        cloud.coords.push_back(annulus.center[0] + x);
        cloud.coords.push_back(annulus.center[1] + y);
    }
    return cloud;
}

PointCloud gen_two_square(const TwoSquareParams& params, Rng& rng) {
    if (params.annuli.empty() || params.annuli.size() != params.masses.size())
        throw ConfigError("gen_two_square: need one mass per annulus");
    if (!params.noise_sigma.empty() && params.noise_sigma.size() != params.annuli.size())
        throw ConfigError("gen_two_square: need one sigma per annulus (or none)");
    double mass_sum = 0.0;
    for (double m : params.masses) mass_sum += m;
    if (std::abs(mass_sum - 1.0) > 1e-9)
        throw ConfigError("gen_two_square: annulus masses must sum to 1");
    if (params.n_outliers < 0 ||
        static_cast<std::size_t>(params.n_outliers) > params.n_points)
        throw ConfigError("gen_two_square: invalid outlier count");

    const auto counts = multinomial_counts(params.n_points, params.masses, rng);

    PointCloud cloud;
    cloud.dim = 2;
    cloud.coords.reserve(2 * params.n_points);
    for (std::size_t g = 0; g < params.annuli.size(); ++g) {
        PointCloud part = sample_square_annulus(params.annuli[g], counts[g], rng);
        if (!params.noise_sigma.empty() && params.noise_sigma[g] > 0.0) {
            const double sigma = params.noise_sigma[g];
            for (std::size_t i = 0; i < part.size(); ++i) {
                part.coords[2 * i] += sigma * rng.normal();
                part.coords[2 * i + 1] += sigma * rng.normal();
            }
        }
        cloud.coords.insert(cloud.coords.end(), part.coords.begin(), part.coords.end());
    }

    if (params.n_outliers > 0) {
        cloud.labels.assign(cloud.size(), Label::Signal);
        Rect box = cloud.bounding_box();
        const double pad_x = 0.05 * box.width();
        const double pad_y = 0.05 * box.height();
        box.xmin -= pad_x;
        box.xmax += pad_x;
        box.ymin -= pad_y;
        box.ymax += pad_y;

        // partial Fisher-Yates: which points get replaced
        const std::size_t n = cloud.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int t = 0; t < params.n_outliers; ++t) {
            const std::size_t pick =
                static_cast<std::size_t>(t) + rng.below(n - static_cast<std::size_t>(t));
            std::swap(order[static_cast<std::size_t>(t)], order[pick]);
        }
        for (int t = 0; t < params.n_outliers; ++t) {
            const std::size_t idx = order[static_cast<std::size_t>(t)];
            cloud.coords[2 * idx] = rng.uniform(box.xmin, box.xmax);
            cloud.coords[2 * idx + 1] = rng.uniform(box.ymin, box.ymax);
            cloud.labels[idx] = Label::Outlier;
        }
    }
    return cloud;
}

PointCloud add_outliers(const PointCloud& cloud, std::size_t n_out, const Rect& region, Rng& rng) {
    if (!(region.width() > 0.0) || !(region.height() > 0.0))
        throw ConfigError("add_outliers: region must have positive area");
    PointCloud out = cloud;
    if (n_out == 0) return out;
    if (out.labels.empty()) out.labels.assign(out.size(), Label::Signal);
    for (std::size_t i = 0; i < n_out; ++i) {
        const double coords[2] = {rng.uniform(region.xmin, region.xmax),
                                  rng.uniform(region.ymin, region.ymax)};
        out.append(coords, Label::Outlier);
    }
    return out;
}

namespace {

struct CellSampler {
    // cumulative edge lengths per cell for perimeter-uniform draws
    std::vector<Polygon> cells;
    std::vector<std::vector<double>> cumulative;

    explicit CellSampler(std::vector<Polygon> polys) : cells(std::move(polys)) {
        cumulative.resize(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto& vs = cells[c].vertices;
            auto& cum = cumulative[c];
            cum.resize(vs.size());
            double acc = 0.0;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const auto& a = vs[i];
                const auto& b = vs[(i + 1) % vs.size()];
                acc += std::hypot(b[0] - a[0], b[1] - a[1]);
                cum[i] = acc;
            }
        }
    }

    std::array<double, 2> draw_on_boundary(std::size_t cell, Rng& rng) const {
        const auto& vs = cells[cell].vertices;
        const auto& cum = cumulative[cell];
        const double target = rng.uniform() * cum.back();
        const std::size_t e = static_cast<std::size_t>(
            std::lower_bound(cum.begin(), cum.end(), target) - cum.begin());
        const std::size_t ei = std::min(e, vs.size() - 1);
        const double lo = ei == 0 ? 0.0 : cum[ei - 1];
        const double len = cum[ei] - lo;
        const double t = len > 0.0 ? (target - lo) / len : 0.0;
        const auto& a = vs[ei];
        const auto& b = vs[(ei + 1) % vs.size()];
        return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
    }
};

}  // namespace

PointCloud gen_voronoi(const VoronoiParams& params, Rng& rng) {
    if (params.n_sites < 3) throw ConfigError("gen_voronoi: need at least 3 sites");
    if (params.outlier_fraction < 0.0 || params.outlier_fraction >= 1.0)
        throw ConfigError("gen_voronoi: outlier fraction must be in [0, 1)");
    if (params.scale_lambda <= 0.0 || params.strip_half_height <= 0.0 || params.sigma0 < 0.0)
        throw ConfigError("gen_voronoi: scales must be positive");

    // sites; duplicate draws would degenerate the diagram, so retry with a
    // fresh substream (bounded)
    std::vector<std::array<double, 2>> sites;
    for (int attempt = 0; attempt < 16; ++attempt) {
        sites.clear();
        Rng site_rng = attempt == 0 ? Rng(rng.raw()) : Rng(derive_seed(rng.raw(), attempt));
        for (int i = 0; i < params.n_sites; ++i)
            sites.push_back({site_rng.laplace(params.scale_lambda),
                             site_rng.uniform(-params.strip_half_height, params.strip_half_height)});
        std::vector<std::array<double, 2>> sorted = sites;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
        sites.clear();
    }
    if (sites.empty()) throw NumericalError("gen_voronoi: could not draw distinct sites");

    double xmin = sites[0][0], xmax = sites[0][0];
    for (const auto& s : sites) {
        xmin = std::min(xmin, s[0]);
        xmax = std::max(xmax, s[0]);
    }
    const Rect working_box{xmin - 4.0 * params.scale_lambda, xmax + 4.0 * params.scale_lambda,
                           -params.strip_half_height, params.strip_half_height};
    const CellSampler sampler(voronoi_cells(sites, working_box));

    // super-sample: uniform cell, then perimeter-uniform boundary point
    const std::size_t n_super = params.n_super;
    std::vector<std::array<double, 2>> points(n_super);
    std::vector<Label> labels(n_super, Label::Signal);
    for (std::size_t i = 0; i < n_super; ++i) {
        const std::size_t cell = rng.below(static_cast<std::uint64_t>(params.n_sites));
        points[i] = sampler.draw_on_boundary(cell, rng);
    }

    // additive noise scaled by the pre-noise |x|
    for (std::size_t i = 0; i < n_super; ++i) {
        const double sigma = params.sigma0 * std::exp(std::abs(points[i][0]) / params.scale_lambda);
        points[i][0] += sigma * rng.normal();
        points[i][1] += sigma * rng.normal();
    }

    // outlier replacement happens before cropping
    const std::size_t n_replace =
        static_cast<std::size_t>(std::floor(params.outlier_fraction * static_cast<double>(n_super)));
    if (n_replace > 0) {
        std::vector<std::size_t> order(n_super);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t t = 0; t < n_replace; ++t) {
            const std::size_t pick = t + rng.below(n_super - t);
            std::swap(order[t], order[pick]);
        }
        for (std::size_t t = 0; t < n_replace; ++t) {
            const std::size_t idx = order[t];
            points[idx] = {rng.uniform(params.crop.xmin, params.crop.xmax),
                           rng.uniform(params.crop.ymin, params.crop.ymax)};
            labels[idx] = Label::Outlier;
        }
    }

    PointCloud cloud;
    cloud.dim = 2;
    for (std::size_t i = 0; i < n_super; ++i) {
        if (!params.crop.contains(points[i][0], points[i][1])) continue;
        cloud.append(points[i], labels[i]);
    }
    if (cloud.coords.empty()) throw DataError("gen_voronoi: no points survived the crop");
    return cloud;
}

}  // namespace rdad
