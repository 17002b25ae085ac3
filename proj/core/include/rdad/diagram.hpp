#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace rdad {

struct PersistencePoint {
    int dim = 0;
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();
    // Pixel (i, j) whose insertion kills the class. Set for dimension-1
    // points of 2-D cubical filtrations.
    std::optional<std::pair<std::int64_t, std::int64_t>> death_cell;

    bool essential() const { return std::isinf(death); }
    double persistence() const { return death - birth; }
    bool operator==(const PersistencePoint&) const = default;
};

struct PersistenceDiagram {
    std::vector<PersistencePoint> points;
    int field_char = 11;

    std::vector<PersistencePoint> in_dimension(int dim) const {
        std::vector<PersistencePoint> out;
        for (const auto& p : points)
            if (p.dim == dim) out.push_back(p);
        return out;
    }
};

}  // namespace rdad
