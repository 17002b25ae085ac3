#pragma once

#include <array>
#include <vector>

#include "rdad/point_cloud.hpp"

namespace rdad {

// Convex polygon, counter-clockwise vertex order.
struct Polygon {
    std::vector<std::array<double, 2>> vertices;

    bool empty() const { return vertices.size() < 3; }
    double perimeter() const;
    double area() const;
};

Polygon rect_polygon(const Rect& rect);

// Intersection with the half-plane {x : dot(x - origin, normal) <= 0}.
Polygon clip_half_plane(const Polygon& poly, const std::array<double, 2>& origin,
                        const std::array<double, 2>& normal);

// Voronoi cells of the sites, each clipped to `box`. cell[i] is the region
// of box closer to sites[i] than to any other site; computed by cutting the
// box with the perpendicular-bisector half-planes (exact for our site
// counts, no Delaunay library needed).
std::vector<Polygon> voronoi_cells(const std::vector<std::array<double, 2>>& sites,
                                   const Rect& box);

double point_segment_distance(const std::array<double, 2>& p, const std::array<double, 2>& a,
                              const std::array<double, 2>& b);

// Distance from p to the boundary of the polygon (minimum over edges).
double distance_to_boundary(const Polygon& poly, const std::array<double, 2>& p);

}  // namespace rdad
