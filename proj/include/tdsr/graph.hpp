#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tdsr/core.hpp"

namespace tdsr {

// Simple undirected graph; adjacency stored as per-vertex neighborhood bitmasks.
// Invariants: adj[v] symmetric, no self-loops, n <= kMaxOrder.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;  // adj[v] = open neighborhood N(v)

    Graph() = default;

    explicit Graph(int order) {
        if (order < 0) fail(Errc::BadParameter, "negative order");
        if (order > kMaxOrder) fail(Errc::OrderTooLarge, "order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
        n = order;
        adj.assign(static_cast<std::size_t>(order), 0u);
    }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::VertexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." + std::to_string(n - 1));
        if (u == v) fail(Errc::SelfLoop, "self-loop at " + std::to_string(u));
        adj[static_cast<std::size_t>(u)] |= vbit(v);
        adj[static_cast<std::size_t>(v)] |= vbit(u);
    }

    bool has_edge(int u, int v) const { return set_contains(adj[static_cast<std::size_t>(u)], v); }

    int degree(int v) const { return set_size(adj[static_cast<std::size_t>(v)]); }

    VertexSet vertices() const { return full_set(n); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }

    // sorted lexicographically, u < v
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for_each_member(adj[static_cast<std::size_t>(u)] & ~(full_set(u + 1)), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const Graph& other) const { return n == other.n && adj == other.adj; }
};

inline int min_degree(const Graph& g) {
    int d = g.n;
    for (int v = 0; v < g.n; ++v) d = std::min(d, g.degree(v));
    return d;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

inline bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.adj[static_cast<std::size_t>(v)] == 0) return true;
    return false;
}

// connected component containing v, as a vertex mask
inline VertexSet component_mask(const Graph& g, int v) {
    VertexSet seen = vbit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_member(frontier, [&](int u) { next |= g.adj[static_cast<std::size_t>(u)]; });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

// component vertex masks, ordered by smallest member
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left) {
        const VertexSet comp = component_mask(g, std::countr_zero(left));
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return component_mask(g, 0) == g.vertices();
}

// perm[old] = new label; used for relabeling invariance checks
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n) fail(Errc::BadParameter, "permutation size mismatch");
    Graph out(g.n);
    for (int v = 0; v < g.n; ++v)
        for_each_member(g.adj[static_cast<std::size_t>(v)], [&](int u) {
            if (u > v) out.add_edge(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(u)]);
        });
    return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.n + b.n);
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge(a.n + u, a.n + v);
    return out;
}

// Edge-list text format: optional "#" comment lines, a header "n <order>",
// then one "u v" pair per line. Duplicate edges are ignored.
inline Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            long long order = -1;
            std::string extra;
            if (!(ls >> tag >> order) || tag != "n" || (ls >> extra))
                fail(Errc::MalformedLine, "line " + std::to_string(lineno) + ": expected header \"n <order>\"");
            if (order < 0) fail(Errc::MalformedLine, "line " + std::to_string(lineno) + ": negative order");
            if (order > kMaxOrder) fail(Errc::OrderTooLarge, "line " + std::to_string(lineno) + ": order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
            g = Graph(static_cast<int>(order));
            have_header = true;
            continue;
        }
        long long u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            fail(Errc::MalformedLine, "line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || u >= g.n || v < 0 || v >= g.n)
            fail(Errc::VertexOutOfRange, "line " + std::to_string(lineno) + ": vertex outside 0.." + std::to_string(g.n - 1));
        if (u == v) fail(Errc::SelfLoop, "line " + std::to_string(lineno) + ": self-loop at " + std::to_string(u));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_header) fail(Errc::MalformedLine, "missing header \"n <order>\"");
    return g;
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.n) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// Deterministic DOT: vertices in index order, then edges sorted with u < v.
inline std::string to_dot(const Graph& g, const std::vector<std::string>* labels = nullptr) {
    std::string out = "graph {\n";
    for (int v = 0; v < g.n; ++v) {
        out += "  " + std::to_string(v);
        if (labels && v < static_cast<int>(labels->size())) out += " [label=\"" + (*labels)[static_cast<std::size_t>(v)] + "\"]";
        out += ";\n";
    }
    for (const auto& [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

// {"n": 3, "edges": [[0,1],[1,2]]}, edges sorted lexicographically
inline std::string graph_to_json(const Graph& g) {
    std::string out = "{\"n\":" + std::to_string(g.n) + ",\"edges\":[";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out += ',';
        out += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
        first = false;
    }
    out += "]}";
    return out;
}

}  // namespace tdsr
