#pragma once

#include <vector>

#include "rdad/diagram.hpp"

namespace rdad {

// One assignment of the optimal pairing: indices into the dimension-restricted
// point lists, -1 meaning the diagonal.
struct Matching {
    struct Pair {
        int index_p = -1;
        int index_q = -1;
    };
    std::vector<Pair> pairs;
    double cost = 0.0;
};

// Exact bottleneck distance between the dimension-dim slices of P and Q.
// Points may match the diagonal at cost (death - birth) / 2. Points with
// infinite death match only each other at cost |birth difference|; if the
// two diagrams disagree on how many there are, the distance is +infinity.
double bottleneck(const PersistenceDiagram& P, const PersistenceDiagram& Q, int dim);

// Exhaustive enumeration over all pairings including diagonal assignments.
// Testing oracle; throws ConfigError when |P| + |Q| > 8 in the slice.
double brute_force_bottleneck(const PersistenceDiagram& P, const PersistenceDiagram& Q, int dim);
Matching brute_force_matching(const PersistenceDiagram& P, const PersistenceDiagram& Q, int dim);

// Points of dimension dim with death - birth > 2r. Infinite deaths always
// qualify. The boundary death = birth + 2r is not significant.
std::vector<PersistencePoint> significant_points(const PersistenceDiagram& D, int dim, double r);

}  // namespace rdad
