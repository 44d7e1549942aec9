#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdsr/domination.hpp"
#include "tdsr/isomorphism.hpp"

namespace tdsr {

inline constexpr long kDefaultStateCap = 1L << 22;

// Explicit D_k^t(G): all total dominating sets of size <= k, edges joining
// sets that differ by one vertex. Vertices are listed in (popcount, bitmask)
// order and the edge list is sorted.
struct ReconGraph {
    int k = 0;
    std::vector<VertexSet> vertices;
    std::vector<std::pair<int, int>> edges;
    bool k_below_gamma = false;  // k < gamma_t(G): the graph is empty
};

struct ReconPath {
    std::vector<VertexSet> steps;
};

struct ConnectivityReport {
    int k = 0;
    long num_vertices = 0;
    long num_components = 0;
    bool is_connected = false;
    std::vector<VertexSet> isolated_gamma_sets;  // Gamma_t-sets isolated at k = Gamma_t
};

namespace detail {

struct TdsIndex {
    std::vector<VertexSet> sets;  // (popcount, bitmask) order

    int find(VertexSet s) const {
        auto less = [](VertexSet a, VertexSet b) {
            const int pa = set_size(a), pb = set_size(b);
            return pa != pb ? pa < pb : a < b;
        };
        auto it = std::lower_bound(sets.begin(), sets.end(), s, less);
        if (it == sets.end() || *it != s) return -1;
        return static_cast<int>(it - sets.begin());
    }
};

inline TdsIndex enumerate_index(const Graph& g, int k, long cap) {
    TdsIndex idx;
    enumerate_tds(g, k, [&](VertexSet s) {
        if (static_cast<long>(idx.sets.size()) >= cap)
            fail(Errc::CapExceeded, "more than " + std::to_string(cap) + " total dominating sets");
        idx.sets.push_back(s);
    });
    return idx;
}

struct Dsu {
    std::vector<int> parent, size;

    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    }
};

// Every edge of D_k^t is an add-edge seen from its smaller endpoint, so
// scanning one-vertex extensions of each set finds the whole edge set.
inline Dsu union_add_edges(const Graph& g, const TdsIndex& idx, int k) {
    Dsu dsu(static_cast<int>(idx.sets.size()));
    for (int i = 0; i < static_cast<int>(idx.sets.size()); ++i) {
        const VertexSet s = idx.sets[static_cast<std::size_t>(i)];
        if (set_size(s) >= k) continue;
        for_each_member(g.vertices() & ~s, [&](int v) {
            const int j = idx.find(s | vbit(v));  // supersets of a TDS are TDSs
            dsu.unite(i, j);
        });
    }
    return dsu;
}

inline long count_components(const Graph& g, int k, long cap) {
    const TdsIndex idx = enumerate_index(g, k, cap);
    if (idx.sets.empty()) return 0;
    Dsu dsu = union_add_edges(g, idx, k);
    long roots = 0;
    for (int i = 0; i < static_cast<int>(idx.sets.size()); ++i)
        if (dsu.find(i) == i) ++roots;
    return roots;
}

}  // namespace detail

inline ReconGraph build_recon_graph(const Graph& g, int k, long cap = kDefaultStateCap) {
    detail::require_no_isolated(g);
    if (k < 0 || k > g.n) fail(Errc::BadParameter, "k must lie in 0..n");
    ReconGraph out;
    out.k = k;
    out.vertices = detail::enumerate_index(g, k, cap).sets;
    out.k_below_gamma = out.vertices.empty();
    detail::TdsIndex idx{out.vertices};
    for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i) {
        const VertexSet s = out.vertices[static_cast<std::size_t>(i)];
        if (set_size(s) >= k) continue;
        for_each_member(g.vertices() & ~s, [&](int v) {
            out.edges.emplace_back(i, idx.find(s | vbit(v)));
        });
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

inline ExplicitGraph recon_to_explicit(const ReconGraph& r) {
    ExplicitGraph g(static_cast<int>(r.vertices.size()));
    for (const auto& [i, j] : r.edges) g.add_edge(i, j);
    g.sort_adj();
    return g;
}

inline ConnectivityReport connectivity(const Graph& g, int k, long cap = kDefaultStateCap) {
    detail::require_no_isolated(g);
    if (k < 0 || k > g.n) fail(Errc::BadParameter, "k must lie in 0..n");
    ConnectivityReport rep;
    rep.k = k;
    const detail::TdsIndex idx = detail::enumerate_index(g, k, cap);
    rep.num_vertices = static_cast<long>(idx.sets.size());
    if (idx.sets.empty()) {
        rep.num_components = 0;
        rep.is_connected = true;  // empty D_k^t reported as 0 components
        return rep;
    }
    detail::Dsu dsu = detail::union_add_edges(g, idx, k);
    for (int i = 0; i < static_cast<int>(idx.sets.size()); ++i)
        if (dsu.find(i) == i) ++rep.num_components;
    rep.is_connected = rep.num_components <= 1;
    const DominationProfile prof = domination_profile(g);
    if (k == prof.Gamma_t)
        for (VertexSet s : prof.Gamma_t_sets) {
            const int i = idx.find(s);
            if (i >= 0 && dsu.size[static_cast<std::size_t>(dsu.find(i))] == 1) rep.isolated_gamma_sets.push_back(s);
        }
    return rep;
}

// Connectivity flags for every k in Gamma_t..n, plus the resulting d_0.
struct D0Scan {
    int gamma_t = 0;
    int Gamma_t = 0;
    int d0 = 0;
    std::vector<char> connected;  // connected[i] is the flag at k = Gamma_t + i
};

// d_0(G): the least l such that D_k^t(G) is connected for every k >= l. The
// whole range Gamma_t..n is checked rather than stopping at the first
// connected k, so no monotonicity assumption enters the computation.
inline D0Scan d0_scan(const Graph& g, long cap = kDefaultStateCap) {
    detail::require_no_isolated(g);
    const DominationProfile prof = domination_profile(g);
    D0Scan scan;
    scan.gamma_t = prof.gamma_t;
    scan.Gamma_t = prof.Gamma_t;
    for (int k = prof.Gamma_t; k <= g.n; ++k)
        scan.connected.push_back(detail::count_components(g, k, cap) <= 1 ? 1 : 0);
    int d = prof.Gamma_t;
    for (int k = prof.Gamma_t; k <= g.n; ++k)
        if (!scan.connected[static_cast<std::size_t>(k - prof.Gamma_t)]) d = k + 1;
    scan.d0 = d;
    return scan;
}

inline int d0(const Graph& g, long cap = kDefaultStateCap) { return d0_scan(g, cap).d0; }

struct ComponentInfo {
    VertexSet id = 0;  // smallest bitmask in the component
    long size = 0;
};

inline ComponentInfo component_of(const Graph& g, VertexSet s, int k, long cap = kDefaultStateCap) {
    detail::require_no_isolated(g);
    detail::require_subset(g, s);
    if (k < 0 || k > g.n) fail(Errc::BadParameter, "k must lie in 0..n");
    if (!detail::is_tds_unchecked(g, s)) fail(Errc::NotATds, set_to_string(s) + " is not a total dominating set");
    if (set_size(s) > k) fail(Errc::SizeExceedsK, set_to_string(s) + " has more than k = " + std::to_string(k) + " vertices");
    const detail::TdsIndex idx = detail::enumerate_index(g, k, cap);
    detail::Dsu dsu = detail::union_add_edges(g, idx, k);
    const int root = dsu.find(idx.find(s));
    ComponentInfo info;
    info.size = dsu.size[static_cast<std::size_t>(root)];
    VertexSet best = ~VertexSet{0};
    for (int i = 0; i < static_cast<int>(idx.sets.size()); ++i)
        if (dsu.find(i) == root) best = std::min(best, idx.sets[static_cast<std::size_t>(i)]);
    info.id = best;
    return info;
}

// Shortest reconfiguration witness between two TDSs inside D_k^t(G), by
// breadth-first search over the implicit graph. Neighbours are generated in
// increasing bitmask order, which fixes the returned path.
inline std::optional<ReconPath> reconfigure(const Graph& g, VertexSet s, VertexSet t, int k, long cap = kDefaultStateCap) {
    detail::require_no_isolated(g);
    detail::require_subset(g, s);
    detail::require_subset(g, t);
    if (k < 0 || k > g.n) fail(Errc::BadParameter, "k must lie in 0..n");
    for (VertexSet x : {s, t})
        if (!detail::is_tds_unchecked(g, x)) fail(Errc::NotATds, set_to_string(x) + " is not a total dominating set");
    if (set_size(s) > k || set_size(t) > k) fail(Errc::SizeExceedsK, "endpoint larger than k = " + std::to_string(k));

    std::unordered_map<VertexSet, VertexSet> parent;  // child -> predecessor
    parent.emplace(s, s);
    std::vector<VertexSet> frontier = {s}, next;
    bool found = s == t;
    while (!found && !frontier.empty()) {
        next.clear();
        for (VertexSet cur : frontier) {
            // deletions in descending bit order then additions ascending:
            // neighbours appear in increasing bitmask order
            std::vector<VertexSet> nbrs;
            {
                VertexSet left = cur;
                while (left) {
                    const int v = 31 - std::countl_zero(left);
                    left &= ~vbit(v);
                    const VertexSet smaller = cur & ~vbit(v);
                    if (detail::is_tds_unchecked(g, smaller)) nbrs.push_back(smaller);
                }
            }
            if (set_size(cur) < k)
                for_each_member(g.vertices() & ~cur, [&](int v) { nbrs.push_back(cur | vbit(v)); });
            for (VertexSet nb : nbrs) {
                if (parent.count(nb)) continue;
                if (static_cast<long>(parent.size()) >= cap) fail(Errc::CapExceeded, "search state cap exceeded");
                parent.emplace(nb, cur);
                if (nb == t) {
                    found = true;
                    break;
                }
                next.push_back(nb);
            }
            if (found) break;
        }
        frontier.swap(next);
    }
    if (!found) return std::nullopt;
    ReconPath path;
    for (VertexSet cur = t;; cur = parent.at(cur)) {
        path.steps.push_back(cur);
        if (cur == s) break;
    }
    std::reverse(path.steps.begin(), path.steps.end());
    return path;
}

// {"k":3,"vertices":["0x3",...],"edges":[[0,4],...],"components":1}
inline std::string recon_to_json(const ReconGraph& r) {
    std::string out = "{\"k\":" + std::to_string(r.k) + ",\"vertices\":[";
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        if (i) out += ',';
        out += '"' + set_to_hex(r.vertices[i]) + '"';
    }
    out += "],\"edges\":[";
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        if (i) out += ',';
        out += "[" + std::to_string(r.edges[i].first) + "," + std::to_string(r.edges[i].second) + "]";
    }
    long components = 0;
    {
        detail::Dsu dsu(static_cast<int>(r.vertices.size()));
        for (const auto& [a, b] : r.edges) dsu.unite(a, b);
        for (int i = 0; i < static_cast<int>(r.vertices.size()); ++i)
            if (dsu.find(i) == i) ++components;
    }
    out += "],\"components\":" + std::to_string(components) + "}";
    return out;
}

// DOT with the member sets as labels
inline std::string recon_to_dot(const ReconGraph& r) {
    std::string out = "graph {\n";
    for (std::size_t i = 0; i < r.vertices.size(); ++i)
        out += "  " + std::to_string(i) + " [label=\"" + set_to_string(r.vertices[i]) + "\"];\n";
    for (const auto& [a, b] : r.edges) out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

inline std::string connectivity_to_json(const ConnectivityReport& rep) {
    std::string out = "{\"k\":" + std::to_string(rep.k) + ",\"num_vertices\":" + std::to_string(rep.num_vertices) +
                      ",\"num_components\":" + std::to_string(rep.num_components) +
                      ",\"is_connected\":" + (rep.is_connected ? "true" : "false") + ",\"isolated_gamma_sets\":[";
    for (std::size_t i = 0; i < rep.isolated_gamma_sets.size(); ++i) {
        if (i) out += ',';
        out += '"' + set_to_hex(rep.isolated_gamma_sets[i]) + '"';
    }
    out += "]}";
    return out;
}

}  // namespace tdsr
