#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rdad/diagram.hpp"
#include "rdad/filtration.hpp"

namespace rdad {

// Top-cell cubical complex over a 2-D pixel grid. Each pixel is a 2-cell
// carrying its field value; every lower face carries the minimum over its
// incident pixels. Cells live on the interleaved (2*nx+1) x (2*ny+1) grid
// where cell (a, b) has dimension (a mod 2) + (b mod 2); pixel (i, j) sits
// at (2i+1, 2j+1) and vertex (i, j) at (2i, 2j).
struct CubicalComplex {
    GridSpec grid;
    std::int64_t nx = 0;
    std::int64_t ny = 0;
    std::vector<double> cell_values;  // (2nx+1)*(2ny+1), a-fastest

    std::int64_t cells_x() const { return 2 * nx + 1; }
    std::int64_t cells_y() const { return 2 * ny + 1; }
    std::int64_t cell_id(std::int64_t a, std::int64_t b) const { return b * cells_x() + a; }
    int cell_dim(std::int64_t id) const {
        const std::int64_t a = id % cells_x();
        const std::int64_t b = id / cells_x();
        return static_cast<int>((a & 1) + (b & 1));
    }
    double value(std::int64_t id) const { return cell_values[static_cast<std::size_t>(id)]; }
};

// Throws ConfigError unless the field is 2-D.
CubicalComplex build_complex(const ScalarField& field);

// Which homology dimensions to compute.
enum : unsigned { kDim0 = 1u, kDim1 = 2u, kAllDims = 3u };

// Sublevel persistent homology with coefficients in Z/pZ via boundary-matrix
// column reduction with clearing. Zero-persistence pairs are dropped. Each
// dimension-1 death records the killing pixel.
PersistenceDiagram persistence(const CubicalComplex& complex, int p = 11,
                               unsigned dims = kAllDims);

// Brute-force Betti numbers of the sublevel complex at threshold t:
// beta0 by union-find over pixels, beta1 = beta0 - chi with
// chi = V - E + F of the sublevel subcomplex. Independent of the
// reduction path above; serves as its oracle.
std::pair<std::int64_t, std::int64_t> betti_at(const ScalarField& field, double t);

}  // namespace rdad
