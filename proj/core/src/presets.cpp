#include "rdad/presets.hpp"

#include "rdad/errors.hpp"

namespace rdad {

namespace {

TwoSquareParams david_goliath() {
    TwoSquareParams p;
    p.annuli = {{{0.0, 0.0}, 1.0, 1.1}, {{4.0, 0.0}, 0.1, 0.12}};
    p.masses = {0.4, 0.6};
    p.n_points = 500;
    return p;
}

TwoSquareParams antman() {
    TwoSquareParams p;
    p.annuli = {{{0.0, 0.0}, 1.0, 1.4}, {{4.0, 0.0}, 1.0 / 3.0, 1.4 / 3.0}};
    p.masses = {0.5, 0.5};
    p.n_points = 5000;
    return p;
}

std::vector<DatasetPreset> make_presets() {
    std::vector<DatasetPreset> presets;

    DatasetPreset dg;
    dg.name = "david-goliath";
    dg.generator = david_goliath();
    dg.delta_x = 0.02;
    presets.push_back(dg);

    DatasetPreset am;
    am.name = "antman";
    am.generator = antman();
    am.delta_x = 0.02;
    presets.push_back(am);

    DatasetPreset noisy = am;
    noisy.name = "antman-noisy";
    std::get<TwoSquareParams>(noisy.generator).noise_sigma = {0.15, 0.05};
    presets.push_back(noisy);

    DatasetPreset outliers = am;
    outliers.name = "antman-outliers";
    std::get<TwoSquareParams>(outliers.generator).n_outliers = 8;
    presets.push_back(outliers);

    DatasetPreset voronoi;
    voronoi.name = "voronoi-noisy";
    voronoi.generator = VoronoiParams{};
    voronoi.delta_x = 0.01;
    voronoi.grid_rect = VoronoiParams{}.crop;
    presets.push_back(voronoi);

    // contiguous-US cellular towers: explicit rectangle, grid size one
    // hundredth of the shorter side
    DatasetPreset towers;
    towers.name = "towers";
    const Rect us{-126.0, -65.8, 23.9, 50.0};
    towers.delta_x = (us.ymax - us.ymin) / 100.0;
    towers.grid_rect = us;
    towers.ingest_box = us;
    presets.push_back(towers);

    return presets;
}

}  // namespace

const std::vector<DatasetPreset>& all_presets() {
    static const std::vector<DatasetPreset> presets = make_presets();
    return presets;
}

const DatasetPreset& find_preset(const std::string& name) {
    for (const auto& p : all_presets())
        if (p.name == name) return p;
    std::string names;
    for (const auto& p : all_presets()) names += (names.empty() ? "" : ", ") + p.name;
    throw ConfigError("unknown preset '" + name + "' (available: " + names + ")");
}

}  // namespace rdad
