#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rdad/point_cloud.hpp"
#include "rdad/synthgen.hpp"

namespace rdad {

// Named experiment configurations (generator parameters, grid resolution,
// crop rectangles).
struct DatasetPreset {
    std::string name;
    std::variant<std::monostate, TwoSquareParams, VoronoiParams> generator;
    double delta_x = 0.02;
    double padding = 0.05;               // used when grid_rect is absent
    std::optional<Rect> grid_rect;       // explicit evaluation rectangle
    std::optional<Rect> ingest_box;      // crop box for ingested point files

    bool has_generator() const { return generator.index() != 0; }
};

const std::vector<DatasetPreset>& all_presets();
const DatasetPreset& find_preset(const std::string& name);

}  // namespace rdad
