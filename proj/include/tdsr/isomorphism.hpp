#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "tdsr/graph.hpp"

namespace tdsr {

// Adjacency-list graph for objects too large for bitmask rows (explicit
// D_k^t graphs, hypercubes, subset-lattice levels). Neighbor lists are kept
// sorted by the builders.
struct ExplicitGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    ExplicitGraph() = default;
    explicit ExplicitGraph(int order) : n(order), adj(static_cast<std::size_t>(order)) {}

    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    void sort_adj() {
        for (auto& row : adj) std::sort(row.begin(), row.end());
    }

    long edge_count() const {
        long twice = 0;
        for (const auto& row : adj) twice += static_cast<long>(row.size());
        return twice / 2;
    }

    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
};

inline ExplicitGraph to_explicit(const Graph& g) {
    ExplicitGraph out(g.n);
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
    out.sort_adj();
    return out;
}

inline bool is_connected(const ExplicitGraph& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.n;
}

inline ExplicitGraph explicit_path(int m) {
    ExplicitGraph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    g.sort_adj();
    return g;
}

inline ExplicitGraph explicit_cycle(int m) {
    if (m < 3) fail(Errc::BadParameter, "cycle needs m >= 3");
    ExplicitGraph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    g.sort_adj();
    return g;
}

inline ExplicitGraph explicit_star(int leaves) {
    ExplicitGraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    g.sort_adj();
    return g;
}

inline ExplicitGraph explicit_complete(int m) {
    ExplicitGraph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    g.sort_adj();
    return g;
}

inline ExplicitGraph explicit_hypercube(int dim) {
    if (dim < 0 || dim > 12) fail(Errc::TooLarge, "hypercube dimension outside 0..12");
    ExplicitGraph g(1 << dim);
    for (int v = 0; v < g.n; ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v >> b & 1)) g.add_edge(v, v | (1 << b));
    g.sort_adj();
    return g;
}

// Levels lo..hi of the subset lattice of an n-set: vertices are the subsets
// with lo <= |S| <= hi, edges join S and S + {x}.
inline ExplicitGraph explicit_hasse_levels(int n, int lo, int hi) {
    if (n < 0 || n > 12 || lo < 0 || hi > n || lo > hi) fail(Errc::BadParameter, "bad level range");
    std::vector<int> id(static_cast<std::size_t>(1) << n, -1);
    std::vector<int> masks;
    for (int size = lo; size <= hi; ++size)
        for (int m = 0; m < (1 << n); ++m)
            if (std::popcount(static_cast<unsigned>(m)) == size) {
                id[static_cast<std::size_t>(m)] = static_cast<int>(masks.size());
                masks.push_back(m);
            }
    ExplicitGraph g(static_cast<int>(masks.size()));
    for (std::size_t i = 0; i < masks.size(); ++i) {
        const int m = masks[i];
        if (std::popcount(static_cast<unsigned>(m)) >= hi) continue;
        for (int b = 0; b < n; ++b)
            if (!(m >> b & 1)) g.add_edge(static_cast<int>(i), id[static_cast<std::size_t>(m | (1 << b))]);
    }
    g.sort_adj();
    return g;
}

struct IsoBudget {
    int max_order = 4096;
    long max_nodes = 4'000'000;
};

namespace detail {

// Joint colour refinement: vertices of both graphs share one colour id space,
// so per-colour class sizes are directly comparable.
struct JointColors {
    std::vector<int> a, b;
    bool compatible = true;
};

inline JointColors refine_joint(const ExplicitGraph& ga, const ExplicitGraph& gb, std::vector<int> ca, std::vector<int> cb) {
    const int n = ga.n;
    using Sig = std::pair<int, std::vector<int>>;
    int colors = 0;
    {
        std::map<int, int> remap;
        for (int c : ca) remap.emplace(c, 0);
        for (int c : cb) remap.emplace(c, 0);
        for (auto& [k, v] : remap) v = colors++;
        for (int& c : ca) c = remap[c];
        for (int& c : cb) c = remap[c];
    }
    while (true) {
        std::map<Sig, int> next;
        auto signature = [](const ExplicitGraph& g, const std::vector<int>& col, int v) {
            Sig s{col[static_cast<std::size_t>(v)], {}};
            s.second.reserve(g.adj[static_cast<std::size_t>(v)].size());
            for (int u : g.adj[static_cast<std::size_t>(v)]) s.second.push_back(col[static_cast<std::size_t>(u)]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::vector<Sig> sa(static_cast<std::size_t>(n)), sb(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sa[static_cast<std::size_t>(v)] = signature(ga, ca, v);
            sb[static_cast<std::size_t>(v)] = signature(gb, cb, v);
            next.emplace(sa[static_cast<std::size_t>(v)], 0);
            next.emplace(sb[static_cast<std::size_t>(v)], 0);
        }
        int fresh = 0;
        for (auto& [k, v] : next) v = fresh++;
        std::vector<int> na(static_cast<std::size_t>(n)), nb(static_cast<std::size_t>(n));
        std::vector<long> count_a(static_cast<std::size_t>(fresh), 0), count_b(static_cast<std::size_t>(fresh), 0);
        for (int v = 0; v < n; ++v) {
            na[static_cast<std::size_t>(v)] = next[sa[static_cast<std::size_t>(v)]];
            nb[static_cast<std::size_t>(v)] = next[sb[static_cast<std::size_t>(v)]];
            ++count_a[static_cast<std::size_t>(na[static_cast<std::size_t>(v)])];
            ++count_b[static_cast<std::size_t>(nb[static_cast<std::size_t>(v)])];
        }
        if (count_a != count_b) return {std::move(na), std::move(nb), false};
        const bool stable = fresh == colors;
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) return {std::move(ca), std::move(cb), true};
        colors = fresh;
    }
}

struct EdgeKey {
    std::size_t operator()(long e) const { return std::hash<long>()(e); }
};

inline bool iso_backtrack(const ExplicitGraph& ga, const ExplicitGraph& gb,
                          const std::unordered_set<long, EdgeKey>& edges_b,
                          std::vector<int> ca, std::vector<int> cb,
                          long& nodes, const IsoBudget& budget) {
    const int n = ga.n;
    int max_color = 0;
    for (int c : ca) max_color = std::max(max_color, c);
    std::vector<int> class_size(static_cast<std::size_t>(max_color + 1), 0);
    for (int c : ca) ++class_size[static_cast<std::size_t>(c)];

    int split = -1;
    for (int c = 0; c <= max_color; ++c)
        if (class_size[static_cast<std::size_t>(c)] > 1 &&
            (split < 0 || class_size[static_cast<std::size_t>(c)] < class_size[static_cast<std::size_t>(split)]))
            split = c;

    if (split < 0) {
        // discrete partition: read off the bijection and verify it
        std::vector<int> map_ab(static_cast<std::size_t>(n), -1), where_b(static_cast<std::size_t>(max_color + 1), -1);
        for (int v = 0; v < n; ++v) where_b[static_cast<std::size_t>(cb[static_cast<std::size_t>(v)])] = v;
        for (int v = 0; v < n; ++v) map_ab[static_cast<std::size_t>(v)] = where_b[static_cast<std::size_t>(ca[static_cast<std::size_t>(v)])];
        for (int v = 0; v < n; ++v)
            for (int u : ga.adj[static_cast<std::size_t>(v)]) {
                if (u < v) continue;
                long key = static_cast<long>(std::min(map_ab[static_cast<std::size_t>(v)], map_ab[static_cast<std::size_t>(u)])) * n +
                           std::max(map_ab[static_cast<std::size_t>(v)], map_ab[static_cast<std::size_t>(u)]);
                if (!edges_b.count(key)) return false;
            }
        return true;
    }

    int u = -1;
    for (int v = 0; v < n; ++v)
        if (ca[static_cast<std::size_t>(v)] == split) {
            u = v;
            break;
        }
    const int fresh = max_color + 1;
    for (int v = 0; v < n; ++v) {
        if (cb[static_cast<std::size_t>(v)] != split) continue;
        if (++nodes > budget.max_nodes) fail(Errc::TooLarge, "isomorphism search budget exceeded");
        std::vector<int> na = ca, nb = cb;
        na[static_cast<std::size_t>(u)] = fresh;
        nb[static_cast<std::size_t>(v)] = fresh;
        JointColors ref = refine_joint(ga, gb, std::move(na), std::move(nb));
        if (!ref.compatible) continue;
        if (iso_backtrack(ga, gb, edges_b, std::move(ref.a), std::move(ref.b), nodes, budget)) return true;
    }
    return false;
}

}  // namespace detail

inline bool is_isomorphic(const ExplicitGraph& a, const ExplicitGraph& b, const IsoBudget& budget = {}) {
    if (a.n != b.n) return false;
    if (a.n > budget.max_order) fail(Errc::TooLarge, "order exceeds isomorphism budget");
    if (a.edge_count() != b.edge_count()) return false;
    const int n = a.n;
    if (n == 0) return true;

    auto degree_seq = [](const ExplicitGraph& g) {
        std::vector<int> d(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_seq(a) != degree_seq(b)) return false;

    // neighbor-degree multisets, compared as sorted collections
    auto nd_multiset = [](const ExplicitGraph& g) {
        std::vector<std::vector<int>> all(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            for (int u : g.adj[static_cast<std::size_t>(v)]) all[static_cast<std::size_t>(v)].push_back(g.degree(u));
            std::sort(all[static_cast<std::size_t>(v)].begin(), all[static_cast<std::size_t>(v)].end());
        }
        std::sort(all.begin(), all.end());
        return all;
    };
    if (nd_multiset(a) != nd_multiset(b)) return false;

    detail::JointColors ref = detail::refine_joint(a, b, std::vector<int>(static_cast<std::size_t>(n), 0),
                                                   std::vector<int>(static_cast<std::size_t>(n), 0));
    if (!ref.compatible) return false;

    std::unordered_set<long, detail::EdgeKey> edges_b;
    edges_b.reserve(static_cast<std::size_t>(b.edge_count()) * 2);
    for (int v = 0; v < n; ++v)
        for (int u : b.adj[static_cast<std::size_t>(v)])
            if (u > v) edges_b.insert(static_cast<long>(v) * n + u);

    long nodes = 0;
    return detail::iso_backtrack(a, b, edges_b, std::move(ref.a), std::move(ref.b), nodes, budget);
}

inline bool is_isomorphic(const Graph& a, const Graph& b, const IsoBudget& budget = {}) {
    return is_isomorphic(to_explicit(a), to_explicit(b), budget);
}

namespace detail {

// Single-graph colour refinement with isomorphism-invariant colour ids
// (ids assigned in sorted signature order), so equal final colourings on
// isomorphic graphs correspond.
inline std::vector<int> refine_single(const Graph& g) {
    const int n = g.n;
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    int colors = n == 0 ? 0 : 1;
    while (true) {
        using Sig = std::pair<int, std::vector<int>>;
        std::map<Sig, int> next;
        std::vector<Sig> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            Sig s{col[static_cast<std::size_t>(v)], {}};
            for_each_member(g.adj[static_cast<std::size_t>(v)], [&](int u) { s.second.push_back(col[static_cast<std::size_t>(u)]); });
            std::sort(s.second.begin(), s.second.end());
            next.emplace(s, 0);
            sigs[static_cast<std::size_t>(v)] = std::move(s);
        }
        int fresh = 0;
        for (auto& [k, v] : next) v = fresh++;
        for (int v = 0; v < n; ++v) col[static_cast<std::size_t>(v)] = next[sigs[static_cast<std::size_t>(v)]];
        if (fresh == colors) return col;
        colors = fresh;
    }
}

struct CanonState {
    const Graph* g = nullptr;
    std::vector<std::vector<int>> by_color;  // candidate vertices per colour, ascending colour
    std::vector<int> order;                  // chosen vertices so far
    std::vector<char> used;
    std::uint64_t best = ~0ull;
    std::uint64_t partial = 0;
    int total_bits = 0;

    void search(int pos, int bits_so_far) {
        const int n = g->n;
        if (pos == n) {
            best = std::min(best, partial);
            return;
        }
        // which colour class does this position draw from
        int c = 0, acc = 0;
        while (acc + static_cast<int>(by_color[static_cast<std::size_t>(c)].size()) <= pos) acc += static_cast<int>(by_color[static_cast<std::size_t>(c++)].size());
        for (int v : by_color[static_cast<std::size_t>(c)]) {
            if (used[static_cast<std::size_t>(v)]) continue;
            std::uint64_t row = 0;
            for (int p = 0; p < pos; ++p) row = (row << 1) | (g->has_edge(v, order[static_cast<std::size_t>(p)]) ? 1u : 0u);
            const std::uint64_t cand = (partial << pos) | row;
            const int cand_bits = bits_so_far + pos;
            if (best != ~0ull && cand > (best >> (total_bits - cand_bits))) continue;
            const std::uint64_t saved = partial;
            partial = cand;
            order.push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
            search(pos + 1, cand_bits);
            used[static_cast<std::size_t>(v)] = 0;
            order.pop_back();
            partial = saved;
        }
    }
};

}  // namespace detail

// Canonical form of a small graph: the minimum upper-triangle adjacency code
// over all vertex orders compatible with the refined colouring. Two graphs of
// order <= 11 are isomorphic iff their codes are equal.
inline std::uint64_t canonical_code(const Graph& g) {
    const int n = g.n;
    if (n > 11) fail(Errc::TooLarge, "canonical codes support order <= 11");
    if (n <= 1) return static_cast<std::uint64_t>(n);
    std::vector<int> col = detail::refine_single(g);
    const int num_colors = *std::max_element(col.begin(), col.end()) + 1;
    detail::CanonState st;
    st.g = &g;
    st.by_color.assign(static_cast<std::size_t>(num_colors), {});
    for (int v = 0; v < n; ++v) st.by_color[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])].push_back(v);
    st.used.assign(static_cast<std::size_t>(n), 0);
    st.total_bits = n * (n - 1) / 2;
    st.order.reserve(static_cast<std::size_t>(n));
    st.search(0, 0);
    // fold the order in so codes of different orders never collide
    return st.best | (static_cast<std::uint64_t>(n) << 56);
}

inline std::string code_to_hex(std::uint64_t code) {
    static const char* digits = "0123456789abcdef";
    if (code == 0) return "0x0";
    char buf[17];
    int pos = 16;
    while (code) {
        buf[--pos] = digits[code & 0xf];
        code >>= 4;
    }
    return "0x" + std::string(buf + pos, buf + 16);
}

}  // namespace tdsr
