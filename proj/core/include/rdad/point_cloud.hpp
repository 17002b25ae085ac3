#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rdad {

enum class Label : std::uint8_t { Signal = 0, Outlier = 1 };

std::string label_name(Label label);
Label parse_label(const std::string& name);

struct Rect {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

// Ordered list of D-dimensional points, point-major storage. `labels` is
// either empty (all signal) or one entry per point.
struct PointCloud {
    int dim = 2;
    std::vector<double> coords;
    std::vector<Label> labels;

    std::size_t size() const {
        return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0;
    }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }

    void append(std::span<const double> p, Label label = Label::Signal);

    // Throws DataError unless every point has `dim` finite coordinates,
    // dim >= 1 and the cloud is non-empty.
    void validate() const;

    // FNV-1a over dim and raw coordinate bytes; ties a DensityProfile to the
    // exact cloud its NeighborIndex was built from.
    std::uint64_t fingerprint() const;

    Rect bounding_box() const;  // first two axes
};

double squared_distance(std::span<const double> a, std::span<const double> b);

PointCloud cloud_from_xy(std::span<const double> xs, std::span<const double> ys);

}  // namespace rdad
