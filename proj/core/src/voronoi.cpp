#include "rdad/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rdad {

double Polygon::perimeter() const {
    double sum = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % n];
        sum += std::hypot(b[0] - a[0], b[1] - a[1]);
    }
    return sum;
}

double Polygon::area() const {
    double twice = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % n];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * std::abs(twice);
}

Polygon rect_polygon(const Rect& rect) {
    Polygon p;
    p.vertices = {{rect.xmin, rect.ymin},
                  {rect.xmax, rect.ymin},
                  {rect.xmax, rect.ymax},
                  {rect.xmin, rect.ymax}};
    return p;
}

Polygon clip_half_plane(const Polygon& poly, const std::array<double, 2>& origin,
                        const std::array<double, 2>& normal) {
    Polygon out;
    const std::size_t n = poly.vertices.size();
    if (n == 0) return out;
    out.vertices.reserve(n + 1);

    auto side = [&](const std::array<double, 2>& v) {
        return (v[0] - origin[0]) * normal[0] + (v[1] - origin[1]) * normal[1];
    };

    for (std::size_t i = 0; i < n; ++i) {
        const auto& cur = poly.vertices[i];
        const auto& nxt = poly.vertices[(i + 1) % n];
        const double sc = side(cur);
        const double sn = side(nxt);
        if (sc <= 0.0) out.vertices.push_back(cur);
        if ((sc < 0.0 && sn > 0.0) || (sc > 0.0 && sn < 0.0)) {
            const double t = sc / (sc - sn);
            out.vertices.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
        }
    }
    if (out.vertices.size() < 3) out.vertices.clear();
    return out;
}

std::vector<Polygon> voronoi_cells(const std::vector<std::array<double, 2>>& sites,
                                   const Rect& box) {
    std::vector<Polygon> cells;
    cells.reserve(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        Polygon cell = rect_polygon(box);
        for (std::size_t j = 0; j < sites.size() && !cell.empty(); ++j) {
            if (j == i) continue;
            const std::array<double, 2> mid = {(sites[i][0] + sites[j][0]) / 2.0,
                                               (sites[i][1] + sites[j][1]) / 2.0};
            const std::array<double, 2> toward_j = {sites[j][0] - sites[i][0],
                                                    sites[j][1] - sites[i][1]};
            cell = clip_half_plane(cell, mid, toward_j);
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

double point_segment_distance(const std::array<double, 2>& p, const std::array<double, 2>& a,
                              const std::array<double, 2>& b) {
    const double vx = b[0] - a[0];
    const double vy = b[1] - a[1];
    const double wx = p[0] - a[0];
    const double wy = p[1] - a[1];
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0.0 ? (wx * vx + wy * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = wx - t * vx;
    const double dy = wy - t * vy;
    return std::hypot(dx, dy);
}

double distance_to_boundary(const Polygon& poly, const std::array<double, 2>& p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, poly.vertices[i], poly.vertices[(i + 1) % n]));
    return best;
}

}  // namespace rdad
