#pragma once

#include <optional>

#include "tdsr/isomorphism.hpp"

namespace tdsr {

// Structural recognizers. Cycle/path/star are purely structural; hypercube
// and subset-lattice levels are settled by isomorphism against a generated
// target once the counting invariants match.

inline std::optional<int> matches_cycle(const ExplicitGraph& g) {
    if (g.n < 3 || g.edge_count() != g.n) return std::nullopt;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    return g.n;
}

inline std::optional<int> matches_path(const ExplicitGraph& g) {
    if (g.n < 1 || g.edge_count() != g.n - 1) return std::nullopt;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 2) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;  // tree with max degree <= 2
    return g.n;
}

// K_{1,m}; returns the leaf count m >= 1
inline std::optional<int> matches_star(const ExplicitGraph& g) {
    const int m = g.n - 1;
    if (m < 1 || g.edge_count() != m) return std::nullopt;
    int centers = 0, leaves = 0;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == m) ++centers;
        if (g.degree(v) == 1) ++leaves;
    }
    if (m == 1) return centers == 2 ? std::optional<int>(1) : std::nullopt;  // K_2
    if (centers != 1 || leaves != m) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    return m;
}

inline std::optional<int> matches_hypercube(const ExplicitGraph& g, const IsoBudget& budget = {}) {
    if (g.n < 1 || (g.n & (g.n - 1)) != 0) return std::nullopt;
    const int dim = std::countr_zero(static_cast<unsigned>(g.n));
    if (dim > 12) return std::nullopt;
    if (g.edge_count() != static_cast<long>(dim) * (g.n / 2)) return std::nullopt;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != dim) return std::nullopt;
    if (!is_isomorphic(g, explicit_hypercube(dim), budget)) return std::nullopt;
    return dim;
}

struct QnLevels {
    int n = 0;    // ground-set size
    int ell = 0;  // graph is levels 0..ell of the subset lattice of an n-set
};

// Full subgraph of Q_n: all subsets of cardinality >= some k, reported in the
// complemented normal form "levels 0..ell". The smallest matching ground set
// is returned.
inline std::optional<QnLevels> matches_full_subgraph_of_qn(const ExplicitGraph& g, const IsoBudget& budget = {}) {
    for (int n = 0; n <= 12; ++n) {
        long long vertices = 0, edges = 0, binom = 1;
        for (int ell = 0; ell <= n; ++ell) {
            // binom = C(n, ell)
            if (ell > 0) binom = binom * (n - ell + 1) / ell;
            vertices += binom;
            edges += binom * ell;
            if (vertices > g.n) break;
            if (vertices == g.n && edges == g.edge_count()) {
                if (is_isomorphic(g, explicit_hasse_levels(n, 0, ell), budget)) return QnLevels{n, ell};
            }
        }
    }
    return std::nullopt;
}

}  // namespace tdsr
