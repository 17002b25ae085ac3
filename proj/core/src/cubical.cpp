#include "rdad/cubical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rdad/errors.hpp"

namespace rdad {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// column entry of a boundary matrix: row rank and a coefficient in [1, p)
struct Entry {
    std::int32_t row;
    std::int32_t coeff;
};

// target += factor * source (mod p), both sorted by row ascending
void add_scaled(std::vector<Entry>& target, const std::vector<Entry>& source,
                std::int64_t factor, int p, std::vector<Entry>& scratch) {
    scratch.clear();
    scratch.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() && j < source.size()) {
        if (target[i].row < source[j].row) {
            scratch.push_back(target[i++]);
        } else if (target[i].row > source[j].row) {
            const std::int64_t c = (factor * source[j].coeff) % p;
            if (c != 0) scratch.push_back({source[j].row, static_cast<std::int32_t>(c)});
            ++j;
        } else {
            const std::int64_t c = (target[i].coeff + factor * source[j].coeff) % p;
            if (c != 0) scratch.push_back({target[i].row, static_cast<std::int32_t>(c)});
            ++i;
            ++j;
        }
    }
    for (; i < target.size(); ++i) scratch.push_back(target[i]);
    for (; j < source.size(); ++j) {
        const std::int64_t c = (factor * source[j].coeff) % p;
        if (c != 0) scratch.push_back({source[j].row, static_cast<std::int32_t>(c)});
    }
    target.swap(scratch);
}

std::vector<std::int32_t> modular_inverses(int p) {
    std::vector<std::int32_t> inv(static_cast<std::size_t>(p), 0);
    inv[1] = 1;
    for (int i = 2; i < p; ++i)
        inv[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(
            (static_cast<std::int64_t>(p - p / i) * inv[static_cast<std::size_t>(p % i)]) % p);
    return inv;
}

// rank ordering of a family of cells: (value, cell id) ascending
std::vector<std::int64_t> sorted_by_filtration(const CubicalComplex& cx,
                                               std::vector<std::int64_t> ids) {
    std::sort(ids.begin(), ids.end(), [&](std::int64_t a, std::int64_t b) {
        const double va = cx.value(a);
        const double vb = cx.value(b);
        if (va != vb) return va < vb;
        return a < b;
    });
    return ids;
}

struct UnionFind {
    std::vector<std::int32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        std::int32_t root = x;
        while (parent[static_cast<std::size_t>(root)] != root)
            root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(x)] != root) {
            const std::int32_t next = parent[static_cast<std::size_t>(x)];
            parent[static_cast<std::size_t>(x)] = root;
            x = next;
        }
        return root;
    }
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

CubicalComplex build_complex(const ScalarField& field) {
    if (field.grid.dim() != 2)
        throw ConfigError("build_complex: cubical persistence requires a 2-D field");
    field.grid.validate();

    CubicalComplex cx;
    cx.grid = field.grid;
    cx.nx = field.grid.counts[0];
    cx.ny = field.grid.counts[1];
    const std::int64_t cw = cx.cells_x();
    const std::int64_t ch = cx.cells_y();
    cx.cell_values.assign(static_cast<std::size_t>(cw * ch),
                          std::numeric_limits<double>::infinity());

    auto pixel = [&](std::int64_t i, std::int64_t j) { return field.at(i, j); };

    for (std::int64_t b = 0; b < ch; ++b) {
        for (std::int64_t a = 0; a < cw; ++a) {
            const std::int64_t i = a / 2;  // pixel column touching (a,b) from the right/top
            const std::int64_t j = b / 2;
            double v = std::numeric_limits<double>::infinity();
            if (a & 1) {
                if (b & 1) {
                    v = pixel(i, j);
                } else {
                    // horizontal edge: pixels below and above
                    if (j > 0) v = std::min(v, pixel(i, j - 1));
                    if (j < cx.ny) v = std::min(v, pixel(i, j));
                }
            } else if (b & 1) {
                // vertical edge: pixels left and right
                if (i > 0) v = std::min(v, pixel(i - 1, j));
                if (i < cx.nx) v = std::min(v, pixel(i, j));
            } else {
                for (std::int64_t dj = -1; dj <= 0; ++dj)
                    for (std::int64_t di = -1; di <= 0; ++di) {
                        const std::int64_t pi = i + di;
                        const std::int64_t pj = j + dj;
                        if (pi >= 0 && pi < cx.nx && pj >= 0 && pj < cx.ny)
                            v = std::min(v, pixel(pi, pj));
                    }
            }
            cx.cell_values[static_cast<std::size_t>(cx.cell_id(a, b))] = v;
        }
    }
    return cx;
}

PersistenceDiagram persistence(const CubicalComplex& cx, int p, unsigned dims) {
    if (!is_prime(p)) throw ConfigError("persistence: coefficient characteristic must be prime");

    const std::int64_t cw = cx.cells_x();
    const std::int64_t ch = cx.cells_y();
    const auto inv = modular_inverses(p);
    const std::int32_t minus_one = static_cast<std::int32_t>(p - 1);

    PersistenceDiagram diagram;
    diagram.field_char = p;

    // --- cell families ---------------------------------------------------
    std::vector<std::int64_t> edge_ids;
    std::vector<std::int64_t> vertex_ids;
    std::vector<std::int64_t> pixel_ids;
    edge_ids.reserve(static_cast<std::size_t>(cx.nx * (cx.ny + 1) + (cx.nx + 1) * cx.ny));
    vertex_ids.reserve(static_cast<std::size_t>((cx.nx + 1) * (cx.ny + 1)));
    pixel_ids.reserve(static_cast<std::size_t>(cx.nx * cx.ny));
    for (std::int64_t b = 0; b < ch; ++b)
        for (std::int64_t a = 0; a < cw; ++a) {
            const std::int64_t id = cx.cell_id(a, b);
            const int d = static_cast<int>((a & 1) + (b & 1));
            if (d == 0)
                vertex_ids.push_back(id);
            else if (d == 1)
                edge_ids.push_back(id);
            else
                pixel_ids.push_back(id);
        }

    const auto edge_by_rank = sorted_by_filtration(cx, edge_ids);
    std::vector<std::int32_t> edge_rank(static_cast<std::size_t>(cw * ch), -1);
    for (std::size_t r = 0; r < edge_by_rank.size(); ++r)
        edge_rank[static_cast<std::size_t>(edge_by_rank[r])] = static_cast<std::int32_t>(r);

    // --- dimension 1: reduce pixel boundaries over edge rows --------------
    // pivot edge of a reduced pixel column = the edge whose class that pixel
    // kills; those edges are cleared from the dimension-0 phase below.
    std::vector<std::int32_t> pivot_to_column(edge_by_rank.size(), -1);
    std::vector<std::vector<Entry>> columns;
    std::vector<Entry> col, scratch;
    columns.reserve(pixel_ids.size());

    const auto pixels_in_order = sorted_by_filtration(cx, pixel_ids);
    for (const std::int64_t pid : pixels_in_order) {
        const std::int64_t a = pid % cw;
        const std::int64_t b = pid / cw;
        col.clear();
        // boundary with orientation: bottom + right - top - left
        col.push_back({edge_rank[static_cast<std::size_t>(cx.cell_id(a, b - 1))], 1});
        col.push_back({edge_rank[static_cast<std::size_t>(cx.cell_id(a + 1, b))], 1});
        col.push_back({edge_rank[static_cast<std::size_t>(cx.cell_id(a, b + 1))], minus_one});
        col.push_back({edge_rank[static_cast<std::size_t>(cx.cell_id(a - 1, b))], minus_one});
        std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });

        while (!col.empty()) {
            const std::int32_t r = col.back().row;
            const std::int32_t owner = pivot_to_column[static_cast<std::size_t>(r)];
            if (owner < 0) {
                pivot_to_column[static_cast<std::size_t>(r)] =
                    static_cast<std::int32_t>(columns.size());
                const std::int64_t eid = edge_by_rank[static_cast<std::size_t>(r)];
                const double birth = cx.value(eid);
                const double death = cx.value(pid);
                if ((dims & kDim1) && birth != death) {
                    PersistencePoint pt;
                    pt.dim = 1;
                    pt.birth = birth;
                    pt.death = death;
                    pt.death_cell = std::make_pair((a - 1) / 2, (b - 1) / 2);
                    diagram.points.push_back(pt);
                }
                columns.push_back(std::move(col));
                col = {};
                break;
            }
            const auto& owner_col = columns[static_cast<std::size_t>(owner)];
            const std::int64_t factor =
                (static_cast<std::int64_t>(p - col.back().coeff) *
                 inv[static_cast<std::size_t>(owner_col.back().coeff)]) % p;
            add_scaled(col, owner_col, factor, p, scratch);
        }
        // an empty column would be a 2-cycle, impossible on a planar grid
    }

    if (dims & kDim0) {
        const auto vertex_by_rank = sorted_by_filtration(cx, vertex_ids);
        std::vector<std::int32_t> vertex_rank(static_cast<std::size_t>(cw * ch), -1);
        for (std::size_t r = 0; r < vertex_by_rank.size(); ++r)
            vertex_rank[static_cast<std::size_t>(vertex_by_rank[r])] = static_cast<std::int32_t>(r);

        // --- dimension 0: reduce edge boundaries over vertex rows ---------
        // Columns keep at most two entries throughout, so they are stored
        // inline. Edges cleared by the dimension-1 pass are skipped.
        struct SmallCol {
            Entry e[2];
            int n = 0;
        };
        std::vector<SmallCol> reduced(edge_by_rank.size());
        std::vector<std::int32_t> vertex_pivot_to_col(vertex_by_rank.size(), -1);
        std::vector<bool> vertex_paired(vertex_by_rank.size(), false);

        for (std::size_t er = 0; er < edge_by_rank.size(); ++er) {
            if (pivot_to_column[er] >= 0) continue;  // cleared
            const std::int64_t eid = edge_by_rank[er];
            const std::int64_t a = eid % cw;
            const std::int64_t b = eid / cw;
            SmallCol c;
            std::int64_t tail, head;
            if (a & 1) {  // horizontal: (a-1,b) -> (a+1,b)
                tail = cx.cell_id(a - 1, b);
                head = cx.cell_id(a + 1, b);
            } else {  // vertical: (a,b-1) -> (a,b+1)
                tail = cx.cell_id(a, b - 1);
                head = cx.cell_id(a, b + 1);
            }
            c.e[0] = {vertex_rank[static_cast<std::size_t>(tail)], minus_one};
            c.e[1] = {vertex_rank[static_cast<std::size_t>(head)], 1};
            if (c.e[0].row > c.e[1].row) std::swap(c.e[0], c.e[1]);
            c.n = 2;

            while (c.n > 0) {
                const std::int32_t r = c.e[c.n - 1].row;
                const std::int32_t owner = vertex_pivot_to_col[static_cast<std::size_t>(r)];
                if (owner < 0) {
                    vertex_pivot_to_col[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(er);
                    vertex_paired[static_cast<std::size_t>(r)] = true;
                    const double birth = cx.value(vertex_by_rank[static_cast<std::size_t>(r)]);
                    const double death = cx.value(eid);
                    if (birth != death) {
                        PersistencePoint pt;
                        pt.dim = 0;
                        pt.birth = birth;
                        pt.death = death;
                        diagram.points.push_back(pt);
                    }
                    reduced[er] = c;
                    break;
                }
                const SmallCol& oc = reduced[static_cast<std::size_t>(
                    vertex_pivot_to_col[static_cast<std::size_t>(r)])];
                const std::int64_t factor =
                    (static_cast<std::int64_t>(p - c.e[c.n - 1].coeff) *
                     inv[static_cast<std::size_t>(oc.e[oc.n - 1].coeff)]) % p;
                // inline add: both columns have <= 2 entries sharing the pivot
                SmallCol merged;
                Entry buf[4];
                int bn = 0;
                int i = 0, j = 0;
                while (i < c.n && j < oc.n) {
                    if (c.e[i].row < oc.e[j].row) {
                        buf[bn++] = c.e[i++];
                    } else if (c.e[i].row > oc.e[j].row) {
                        const std::int64_t cf = (factor * oc.e[j].coeff) % p;
                        if (cf != 0) buf[bn++] = {oc.e[j].row, static_cast<std::int32_t>(cf)};
                        ++j;
                    } else {
                        const std::int64_t cf = (c.e[i].coeff + factor * oc.e[j].coeff) % p;
                        if (cf != 0) buf[bn++] = {c.e[i].row, static_cast<std::int32_t>(cf)};
                        ++i;
                        ++j;
                    }
                }
                while (i < c.n) buf[bn++] = c.e[i++];
                while (j < oc.n) {
                    const std::int64_t cf = (factor * oc.e[j].coeff) % p;
                    if (cf != 0) buf[bn++] = {oc.e[j].row, static_cast<std::int32_t>(cf)};
                    ++j;
                }
                merged.n = bn;
                for (int t = 0; t < bn; ++t) merged.e[t] = buf[t];
                c = merged;
            }

            if (c.n == 0 && (dims & kDim1)) {
                // creator edge never killed by a pixel: essential 1-class
                // (cannot occur on a full rectangular grid)
                PersistencePoint pt;
                pt.dim = 1;
                pt.birth = cx.value(eid);
                diagram.points.push_back(pt);
            }
        }

        for (std::size_t r = 0; r < vertex_by_rank.size(); ++r) {
            if (vertex_paired[r]) continue;
            PersistencePoint pt;
            pt.dim = 0;
            pt.birth = cx.value(vertex_by_rank[r]);
            diagram.points.push_back(pt);
        }
    }

    std::sort(diagram.points.begin(), diagram.points.end(),
              [](const PersistencePoint& x, const PersistencePoint& y) {
                  if (x.dim != y.dim) return x.dim < y.dim;
                  if (x.birth != y.birth) return x.birth < y.birth;
                  if (x.death != y.death) return x.death < y.death;
                  return x.death_cell < y.death_cell;
              });
    return diagram;
}

std::pair<std::int64_t, std::int64_t> betti_at(const ScalarField& field, double t) {
    if (field.grid.dim() != 2) throw ConfigError("betti_at: requires a 2-D field");
    const std::int64_t nx = field.grid.counts[0];
    const std::int64_t ny = field.grid.counts[1];

    auto live = [&](std::int64_t i, std::int64_t j) {
        return i >= 0 && i < nx && j >= 0 && j < ny && field.at(i, j) <= t;
    };

    // components of live pixels; diagonal pixels touch through the shared
    // vertex, so 8-connectivity matches the subcomplex
    UnionFind uf(static_cast<std::size_t>(nx * ny));
    std::int64_t faces = 0;
    for (std::int64_t j = 0; j < ny; ++j)
        for (std::int64_t i = 0; i < nx; ++i) {
            if (!live(i, j)) continue;
            ++faces;
            const std::int32_t id = static_cast<std::int32_t>(j * nx + i);
            const std::int64_t di[4] = {1, -1, 0, 1};
            const std::int64_t dj[4] = {0, 1, 1, 1};
            for (int q = 0; q < 4; ++q) {
                const std::int64_t i2 = i + di[q];
                const std::int64_t j2 = j + dj[q];
                if (live(i2, j2)) uf.unite(id, static_cast<std::int32_t>(j2 * nx + i2));
            }
        }
    std::int64_t beta0 = 0;
    for (std::int64_t j = 0; j < ny; ++j)
        for (std::int64_t i = 0; i < nx; ++i) {
            const std::int32_t id = static_cast<std::int32_t>(j * nx + i);
            if (live(i, j) && uf.find(id) == id) ++beta0;
        }

    std::int64_t vertices = 0;
    for (std::int64_t j = 0; j <= ny; ++j)
        for (std::int64_t i = 0; i <= nx; ++i)
            if (live(i - 1, j - 1) || live(i, j - 1) || live(i - 1, j) || live(i, j)) ++vertices;

    std::int64_t edges = 0;
    for (std::int64_t j = 0; j <= ny; ++j)  // horizontal edges
        for (std::int64_t i = 0; i < nx; ++i)
            if (live(i, j - 1) || live(i, j)) ++edges;
    for (std::int64_t j = 0; j < ny; ++j)  // vertical edges
        for (std::int64_t i = 0; i <= nx; ++i)
            if (live(i - 1, j) || live(i, j)) ++edges;

    const std::int64_t chi = vertices - edges + faces;
    return {beta0, beta0 - chi};
}

}  // namespace rdad
