#pragma once

#include <array>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "tdsr/graph.hpp"

namespace tdsr {

// Open private neighbourhood of a vertex s relative to a set S, split into
// the internal part (inside S) and external part (outside S).
struct PrivateNbhd {
    VertexSet opn = 0;
    VertexSet ipn = 0;
    VertexSet epn = 0;
};

namespace detail {

inline void require_no_isolated(const Graph& g) {
    if (has_isolated_vertex(g)) fail(Errc::IsolatedVertex, "total domination is undefined on graphs with isolated vertices");
}

inline void require_subset(const Graph& g, VertexSet s) {
    if ((s & ~g.vertices()) != 0) fail(Errc::VertexOutOfRange, "set contains vertices outside the graph");
}

// every vertex has a neighbor inside s; assumes no isolated vertices
inline bool is_tds_unchecked(const Graph& g, VertexSet s) {
    for (int v = 0; v < g.n; ++v)
        if ((g.adj[static_cast<std::size_t>(v)] & s) == 0) return false;
    return true;
}

// OPN masks for every member of s at once, via prefix/suffix neighborhood unions
inline void opn_all(const Graph& g, VertexSet s, std::array<VertexSet, kMaxOrder>& opn, std::array<int, kMaxOrder>& verts, int& count) {
    count = 0;
    for_each_member(s, [&](int v) { verts[static_cast<std::size_t>(count++)] = v; });
    std::array<VertexSet, kMaxOrder + 1> pre{}, suf{};
    pre[0] = 0;
    for (int i = 0; i < count; ++i) pre[static_cast<std::size_t>(i + 1)] = pre[static_cast<std::size_t>(i)] | g.adj[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])];
    suf[static_cast<std::size_t>(count)] = 0;
    for (int i = count - 1; i >= 0; --i) suf[static_cast<std::size_t>(i)] = suf[static_cast<std::size_t>(i + 1)] | g.adj[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])];
    for (int i = 0; i < count; ++i)
        opn[static_cast<std::size_t>(i)] = g.adj[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] & ~(pre[static_cast<std::size_t>(i)] | suf[static_cast<std::size_t>(i + 1)]);
}

// minimality via OPN(s,S) != {} for every s in S; assumes s is a TDS
inline bool is_mtds_unchecked(const Graph& g, VertexSet s) {
    std::array<VertexSet, kMaxOrder> opn;
    std::array<int, kMaxOrder> verts;
    int count = 0;
    opn_all(g, s, opn, verts, count);
    for (int i = 0; i < count; ++i)
        if (opn[static_cast<std::size_t>(i)] == 0) return false;
    return true;
}

}  // namespace detail

inline bool is_tds(const Graph& g, VertexSet s) {
    detail::require_no_isolated(g);
    detail::require_subset(g, s);
    return detail::is_tds_unchecked(g, s);
}

inline PrivateNbhd private_neighbors(const Graph& g, VertexSet s, int v) {
    if (v < 0 || v >= g.n || !set_contains(s, v)) fail(Errc::VertexNotInSet, "vertex " + std::to_string(v) + " is not a member of " + set_to_string(s));
    VertexSet others = 0;
    for_each_member(s & ~vbit(v), [&](int u) { others |= g.adj[static_cast<std::size_t>(u)]; });
    PrivateNbhd out;
    out.opn = g.adj[static_cast<std::size_t>(v)] & ~others;
    out.ipn = out.opn & s;
    out.epn = out.opn & ~s;
    return out;
}

// Minimality of a TDS: every member keeps a private neighbor.
inline bool is_mtds(const Graph& g, VertexSet s) {
    detail::require_no_isolated(g);
    detail::require_subset(g, s);
    if (!detail::is_tds_unchecked(g, s)) fail(Errc::NotATds, set_to_string(s) + " is not a total dominating set");
    return detail::is_mtds_unchecked(g, s);
}

// Independent reformulation: with H the union of components of G[S] of order
// at least 3 and X the stems of H, S is minimal iff every vertex of H outside
// X has an external private neighbor.
inline bool is_mtds_by_epn(const Graph& g, VertexSet s) {
    detail::require_no_isolated(g);
    detail::require_subset(g, s);
    if (!detail::is_tds_unchecked(g, s)) fail(Errc::NotATds, set_to_string(s) + " is not a total dominating set");
    VertexSet hverts = 0;
    {
        VertexSet left = s;
        while (left) {
            const int v0 = std::countr_zero(left);
            VertexSet comp = vbit(v0), frontier = comp;
            while (frontier) {
                VertexSet next = 0;
                for_each_member(frontier, [&](int u) { next |= g.adj[static_cast<std::size_t>(u)] & s; });
                frontier = next & ~comp;
                comp |= next;
            }
            if (set_size(comp) >= 3) hverts |= comp;
            left &= ~comp;
        }
    }
    VertexSet hstems = 0;
    for_each_member(hverts, [&](int v) {
        const VertexSet nbr_in_s = g.adj[static_cast<std::size_t>(v)] & s;
        if (set_size(nbr_in_s) == 1) hstems |= nbr_in_s;  // v is a leaf of H
    });
    bool ok = true;
    for_each_member(hverts & ~hstems, [&](int v) {
        if (private_neighbors(g, s, v).epn == 0) ok = false;
    });
    return ok;
}

// Naive route: no single-vertex deletion leaves a TDS.
inline bool is_mtds_by_deletion(const Graph& g, VertexSet s) {
    detail::require_no_isolated(g);
    detail::require_subset(g, s);
    if (!detail::is_tds_unchecked(g, s)) fail(Errc::NotATds, set_to_string(s) + " is not a total dominating set");
    bool minimal = true;
    for_each_member(s, [&](int v) {
        if (detail::is_tds_unchecked(g, s & ~vbit(v))) minimal = false;
    });
    return minimal;
}

namespace detail {

inline VertexSet next_same_popcount(VertexSet m) {  // Gosper's hack
    const VertexSet c = m & (0u - m);
    const VertexSet r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

template <typename F>
inline void enumerate_tds_sizes(const Graph& g, int lo, int hi, F&& f) {
    const VertexSet limit = g.n == 0 ? 0 : full_set(g.n);
    for (int size = lo; size <= hi; ++size) {
        if (size == 0) {
            if (is_tds_unchecked(g, 0)) f(VertexSet{0});
            continue;
        }
        VertexSet m = full_set(size);
        while (m <= limit) {
            if (is_tds_unchecked(g, m)) f(m);
            if (size == g.n) break;
            m = next_same_popcount(m);
        }
    }
}

}  // namespace detail

// Emits every TDS with |S| <= k exactly once, in (popcount, bitmask) order.
template <typename F>
inline void enumerate_tds(const Graph& g, int k, F&& f) {
    detail::require_no_isolated(g);
    if (k < 0 || k > g.n) fail(Errc::BadParameter, "k must lie in 0..n");
    detail::enumerate_tds_sizes(g, 0, k, std::forward<F>(f));
}

// Collected stream; jobs > 1 partitions the search by cardinality layer and
// concatenates in layer order, so output is identical to the sequential run.
inline std::vector<VertexSet> all_tds(const Graph& g, int k, int jobs = 1) {
    detail::require_no_isolated(g);
    if (k < 0 || k > g.n) fail(Errc::BadParameter, "k must lie in 0..n");
    if (jobs <= 1) {
        std::vector<VertexSet> out;
        detail::enumerate_tds_sizes(g, 0, k, [&](VertexSet s) { out.push_back(s); });
        return out;
    }
    std::vector<std::vector<VertexSet>> layers(static_cast<std::size_t>(k + 1));
    std::vector<std::thread> workers;
    std::size_t next_layer = 0;
    std::mutex mu;
    const int nthreads = std::min(jobs, k + 1);
    for (int t = 0; t < nthreads; ++t)
        workers.emplace_back([&]() {
            while (true) {
                std::size_t mine;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next_layer > static_cast<std::size_t>(k)) return;
                    mine = next_layer++;
                }
                detail::enumerate_tds_sizes(g, static_cast<int>(mine), static_cast<int>(mine), [&](VertexSet s) { layers[mine].push_back(s); });
            }
        });
    for (auto& w : workers) w.join();
    std::vector<VertexSet> out;
    for (auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

inline std::vector<VertexSet> all_mtds(const Graph& g) {
    detail::require_no_isolated(g);
    std::vector<VertexSet> out;
    detail::enumerate_tds_sizes(g, 0, g.n, [&](VertexSet s) {
        if (detail::is_mtds_unchecked(g, s)) out.push_back(s);
    });
    return out;
}

// Degree-1 vertices.
inline VertexSet leaves(const Graph& g) {
    VertexSet out = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) out |= vbit(v);
    return out;
}

// Neighbours of leaves. Vertices of a K_2 component are leaves without a stem
// (stems are defined on components of order >= 3); see has_k2_component.
inline VertexSet stems(const Graph& g) {
    VertexSet out = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) {
            const int u = std::countr_zero(g.adj[static_cast<std::size_t>(v)]);
            if (g.degree(u) > 1) out |= vbit(u);
        }
    return out;
}

inline bool has_k2_component(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1 && g.degree(std::countr_zero(g.adj[static_cast<std::size_t>(v)])) == 1) return true;
    return false;
}

struct DominationProfile {
    int gamma_t = 0;   // minimum TDS size
    int Gamma_t = 0;   // maximum MTDS size
    int sigma = 0;     // stem count
    int lambda = 0;    // leaf count
    long num_mtds = 0;
    std::vector<VertexSet> gamma_t_sets;
    std::vector<VertexSet> Gamma_t_sets;
};

// Exact profile by exhaustive enumeration over all 2^n subsets.
inline DominationProfile domination_profile(const Graph& g) {
    detail::require_no_isolated(g);
    DominationProfile p;
    p.sigma = set_size(stems(g));
    p.lambda = set_size(leaves(g));
    int best_min = -1, best_max = -1;
    detail::enumerate_tds_sizes(g, 0, g.n, [&](VertexSet s) {
        const int size = set_size(s);
        if (best_min < 0) best_min = size;
        if (size == best_min) p.gamma_t_sets.push_back(s);
        if (detail::is_mtds_unchecked(g, s)) {
            ++p.num_mtds;
            if (size > best_max) {
                best_max = size;
                p.Gamma_t_sets.clear();
            }
            if (size == best_max) p.Gamma_t_sets.push_back(s);
        }
    });
    p.gamma_t = best_min < 0 ? 0 : best_min;
    p.Gamma_t = best_max < 0 ? 0 : best_max;
    return p;
}

inline std::string profile_to_json(const DominationProfile& p) {
    return "{\"gamma_t\":" + std::to_string(p.gamma_t) + ",\"Gamma_t\":" + std::to_string(p.Gamma_t) +
           ",\"sigma\":" + std::to_string(p.sigma) + ",\"lambda\":" + std::to_string(p.lambda) +
           ",\"num_mtds\":" + std::to_string(p.num_mtds) + "}";
}

enum class LinearKind { Path, Cycle };

// gamma_t of paths and cycles: n/2 + 1 when n = 2 (mod 4), else ceil(n/2).
inline int gamma_t_closed(LinearKind kind, int n) {
    if (kind == LinearKind::Path) {
        if (n < 2) fail(Errc::BadParameter, "paths need n >= 2");
        if (n == 2) return 2;
    } else if (n < 3) {
        fail(Errc::BadParameter, "cycles need n >= 3");
    }
    return n % 4 == 2 ? n / 2 + 1 : (n + 1) / 2;
}

// Gamma_t(P_n) = 2*floor((n+1)/3); Gamma_t(C_n) = 2*floor(n/3) when
// n = 2 (mod 6), else floor(2n/3).
inline int Gamma_t_closed(LinearKind kind, int n) {
    if (kind == LinearKind::Path) {
        if (n < 2) fail(Errc::BadParameter, "paths need n >= 2");
        return 2 * ((n + 1) / 3);
    }
    if (n < 3) fail(Errc::BadParameter, "cycles need n >= 3");
    return n % 6 == 2 ? 2 * (n / 3) : 2 * n / 3;
}

// Gamma_t(G) = n-1 structure: n odd and some vertex w leaves a perfect
// matching when deleted, with w adjacent to at least one end of each edge.
inline bool has_Gamma_n_minus_1_structure(const Graph& g) {
    if (g.n < 3) fail(Errc::BadParameter, "needs order >= 3");
    if (!is_connected(g)) fail(Errc::NotConnected, "needs a connected graph");
    if (g.n % 2 == 0) return false;
    for (int w = 0; w < g.n; ++w) {
        const VertexSet rest = g.vertices() & ~vbit(w);
        bool ok = true;
        for_each_member(rest, [&](int v) {
            if (set_size(g.adj[static_cast<std::size_t>(v)] & rest) != 1) ok = false;
        });
        if (!ok) continue;
        for_each_member(rest, [&](int v) {
            const int u = std::countr_zero(g.adj[static_cast<std::size_t>(v)] & rest);
            if ((g.adj[static_cast<std::size_t>(w)] & (vbit(v) | vbit(u))) == 0) ok = false;
        });
        if (ok) return true;
    }
    return false;
}

}  // namespace tdsr
