#include "rdad/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "rdad/errors.hpp"

namespace rdad {

std::string label_name(Label label) {
    return label == Label::Outlier ? "outlier" : "signal";
}

Label parse_label(const std::string& name) {
    if (name == "outlier") return Label::Outlier;
    if (name == "signal" || name.empty()) return Label::Signal;
    throw DataError("unknown point label: '" + name + "'");
}

void PointCloud::append(std::span<const double> p, Label label) {
    coords.insert(coords.end(), p.begin(), p.end());
    if (!labels.empty() || label != Label::Signal) {
        labels.resize(size() - 1, Label::Signal);
        labels.push_back(label);
    }
}

void PointCloud::validate() const {
    if (dim < 1) throw DataError("point cloud dimension must be >= 1");
    if (coords.empty()) throw DataError("point cloud must contain at least one point");
    if (coords.size() % static_cast<std::size_t>(dim) != 0)
        throw DataError("coordinate array length is not a multiple of dim");
    for (double c : coords) {
        if (!std::isfinite(c)) throw DataError("point cloud contains a non-finite coordinate");
    }
    if (!labels.empty() && labels.size() != size())
        throw DataError("label array length does not match point count");
}

std::uint64_t PointCloud::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const void* data, std::size_t n) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= 0x100000001b3ULL;
        }
    };
    mix(&dim, sizeof dim);
    mix(coords.data(), coords.size() * sizeof(double));
    return h;
}

Rect PointCloud::bounding_box() const {
    Rect box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        auto p = point(i);
        box.xmin = std::min(box.xmin, p[0]);
        box.xmax = std::max(box.xmax, p[0]);
        if (dim > 1) {
            box.ymin = std::min(box.ymin, p[1]);
            box.ymax = std::max(box.ymax, p[1]);
        }
    }
    if (dim == 1) box.ymin = box.ymax = 0.0;
    return box;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

PointCloud cloud_from_xy(std::span<const double> xs, std::span<const double> ys) {
    PointCloud cloud;
    cloud.dim = 2;
    cloud.coords.reserve(xs.size() * 2);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cloud.coords.push_back(xs[i]);
        cloud.coords.push_back(ys[i]);
    }
    return cloud;
}

}  // namespace rdad
