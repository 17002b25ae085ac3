#include "rdad/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "rdad/errors.hpp"

namespace rdad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point2 {
    double birth;
    double death;
};

// split the dimension slice into finite points and the births of essential ones
void split_slice(const PersistenceDiagram& d, int dim, std::vector<Point2>& finite,
                 std::vector<double>& essential_births) {
    for (const auto& pt : d.points) {
        if (pt.dim != dim) continue;
        if (pt.essential())
            essential_births.push_back(pt.birth);
        else
            finite.push_back({pt.birth, pt.death});
    }
}

double pair_cost(const Point2& a, const Point2& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diag_cost(const Point2& a) { return (a.death - a.birth) / 2.0; }

// essential points can only pair among themselves; sorted-order matching
// minimizes the sup of |birth differences|
double essential_cost(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return kInf;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Hopcroft-Karp maximum matching; returns the number of matched left nodes.
class HopcroftKarp {
public:
    HopcroftKarp(int n_left, int n_right) : adj_(static_cast<std::size_t>(n_left)), n_right_(n_right) {}

    void add_edge(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

    int max_matching() {
        const int n_left = static_cast<int>(adj_.size());
        match_l_.assign(static_cast<std::size_t>(n_left), -1);
        match_r_.assign(static_cast<std::size_t>(n_right_), -1);
        int result = 0;
        while (bfs()) {
            for (int l = 0; l < n_left; ++l)
                if (match_l_[static_cast<std::size_t>(l)] < 0 && dfs(l)) ++result;
        }
        return result;
    }

private:
    bool bfs() {
        std::queue<int> q;
        dist_.assign(adj_.size(), -1);
        for (std::size_t l = 0; l < adj_.size(); ++l)
            if (match_l_[l] < 0) {
                dist_[l] = 0;
                q.push(static_cast<int>(l));
            }
        bool found = false;
        while (!q.empty()) {
            const int l = q.front();
            q.pop();
            for (int r : adj_[static_cast<std::size_t>(l)]) {
                const int l2 = match_r_[static_cast<std::size_t>(r)];
                if (l2 < 0) {
                    found = true;
                } else if (dist_[static_cast<std::size_t>(l2)] < 0) {
                    dist_[static_cast<std::size_t>(l2)] = dist_[static_cast<std::size_t>(l)] + 1;
                    q.push(l2);
                }
            }
        }
        return found;
    }

    bool dfs(int l) {
        for (int r : adj_[static_cast<std::size_t>(l)]) {
            const int l2 = match_r_[static_cast<std::size_t>(r)];
            if (l2 < 0 || (dist_[static_cast<std::size_t>(l2)] ==
                               dist_[static_cast<std::size_t>(l)] + 1 &&
                           dfs(l2))) {
                match_l_[static_cast<std::size_t>(l)] = r;
                match_r_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(l)] = -2;  // dead end for this phase
        return false;
    }

    std::vector<std::vector<int>> adj_;
    int n_right_;
    std::vector<int> match_l_, match_r_, dist_;
};

// Can every left point whose diagonal cost exceeds delta be matched to some
// right point within delta?
bool side_feasible(const std::vector<Point2>& must_side, const std::vector<Point2>& other,
                   double delta) {
    std::vector<int> must;
    for (std::size_t i = 0; i < must_side.size(); ++i)
        if (diag_cost(must_side[i]) > delta) must.push_back(static_cast<int>(i));
    if (must.empty()) return true;
    if (must.size() > other.size()) return false;

    HopcroftKarp hk(static_cast<int>(must.size()), static_cast<int>(other.size()));
    for (std::size_t mi = 0; mi < must.size(); ++mi) {
        const Point2& pt = must_side[static_cast<std::size_t>(must[mi])];
        for (std::size_t qi = 0; qi < other.size(); ++qi)
            if (pair_cost(pt, other[qi]) <= delta) hk.add_edge(static_cast<int>(mi), static_cast<int>(qi));
    }
    return hk.max_matching() == static_cast<int>(must.size());
}

// A matching at threshold delta exists iff the points of each diagram that
// cannot reach the diagonal can be saturated into the other diagram
// (Mendelsohn-Dulmage combines the two one-sided matchings).
bool feasible(const std::vector<Point2>& ps, const std::vector<Point2>& qs, double delta) {
    return side_feasible(ps, qs, delta) && side_feasible(qs, ps, delta);
}

double finite_bottleneck(const std::vector<Point2>& ps, const std::vector<Point2>& qs) {
    if (ps.empty() && qs.empty()) return 0.0;

    // The optimum is a diagonal cost or a pair cost; a pair cost c >= both
    // diagonal costs can be replaced by the two diagonal assignments, so only
    // pair costs below max(diag_p, diag_q) can be the answer.
    std::vector<double> candidates{0.0};
    for (const auto& pt : ps) candidates.push_back(diag_cost(pt));
    for (const auto& qt : qs) candidates.push_back(diag_cost(qt));
    for (const auto& pt : ps) {
        const double dp = diag_cost(pt);
        for (const auto& qt : qs) {
            const double c = pair_cost(pt, qt);
            if (c < std::max(dp, diag_cost(qt))) candidates.push_back(c);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // smallest feasible candidate
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(ps, qs, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

}  // namespace

double bottleneck(const PersistenceDiagram& P, const PersistenceDiagram& Q, int dim) {
    std::vector<Point2> ps, qs;
    std::vector<double> pe, qe;
    split_slice(P, dim, ps, pe);
    split_slice(Q, dim, qs, qe);

    const double ec = essential_cost(std::move(pe), std::move(qe));
    if (std::isinf(ec)) return kInf;
    return std::max(ec, finite_bottleneck(ps, qs));
}

namespace {

struct BruteState {
    const std::vector<Point2>* ps;
    const std::vector<Point2>* qs;
    std::vector<int> assignment;  // per P point: Q index or -1
    std::vector<bool> used_q;
    double best = kInf;
    std::vector<int> best_assignment;
};

void brute_recurse(BruteState& st, std::size_t i, double current) {
    if (current >= st.best) return;
    if (i == st.ps->size()) {
        double total = current;
        for (std::size_t q = 0; q < st.qs->size(); ++q)
            if (!st.used_q[q]) total = std::max(total, diag_cost((*st.qs)[q]));
        if (total < st.best) {
            st.best = total;
            st.best_assignment = st.assignment;
        }
        return;
    }
    const Point2& pt = (*st.ps)[i];
    for (std::size_t q = 0; q < st.qs->size(); ++q) {
        if (st.used_q[q]) continue;
        st.used_q[q] = true;
        st.assignment[i] = static_cast<int>(q);
        brute_recurse(st, i + 1, std::max(current, pair_cost(pt, (*st.qs)[q])));
        st.used_q[q] = false;
    }
    st.assignment[i] = -1;
    brute_recurse(st, i + 1, std::max(current, diag_cost(pt)));
}

}  // namespace

Matching brute_force_matching(const PersistenceDiagram& P, const PersistenceDiagram& Q, int dim) {
    std::vector<Point2> ps, qs;
    std::vector<double> pe, qe;
    split_slice(P, dim, ps, pe);
    split_slice(Q, dim, qs, qe);
    if (ps.size() + qs.size() + pe.size() + qe.size() > 8)
        throw ConfigError("brute_force_bottleneck: more than 8 points in the slice");

    Matching m;
    m.cost = essential_cost(pe, qe);
    if (std::isinf(m.cost)) return m;

    BruteState st;
    st.ps = &ps;
    st.qs = &qs;
    st.assignment.assign(ps.size(), -1);
    st.used_q.assign(qs.size(), false);
    brute_recurse(st, 0, m.cost);
    m.cost = st.best;

    std::vector<bool> q_taken(qs.size(), false);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        m.pairs.push_back({static_cast<int>(i), st.best_assignment[i]});
        if (st.best_assignment[i] >= 0) q_taken[static_cast<std::size_t>(st.best_assignment[i])] = true;
    }
    for (std::size_t q = 0; q < qs.size(); ++q)
        if (!q_taken[q]) m.pairs.push_back({-1, static_cast<int>(q)});
    return m;
}

double brute_force_bottleneck(const PersistenceDiagram& P, const PersistenceDiagram& Q, int dim) {
    return brute_force_matching(P, Q, dim).cost;
}

std::vector<PersistencePoint> significant_points(const PersistenceDiagram& D, int dim, double r) {
    if (r < 0.0) throw ConfigError("significant_points: radius must be >= 0");
    std::vector<PersistencePoint> out;
    for (const auto& pt : D.points) {
        if (pt.dim != dim) continue;
        if (pt.essential() || pt.death - pt.birth > 2.0 * r) out.push_back(pt);
    }
    return out;
}

}  // namespace rdad
