#pragma once

#include <map>
#include <mutex>
#include <unordered_set>
#include <vector>

#include "tdsr/domination.hpp"
#include "tdsr/isomorphism.hpp"

namespace tdsr {

namespace detail {

// Graphs of the given order up to isomorphism, by vertex augmentation with
// canonical-code rejection: every order-n graph arises from an order-(n-1)
// graph by attaching a new vertex to some (possibly empty) neighbourhood.
inline std::vector<Graph> augment_all(const std::vector<Graph>& smaller, int n) {
    std::map<std::uint64_t, Graph> found;
    for (const Graph& parent : smaller) {
        Graph base(n);
        for (const auto& [u, v] : parent.edges()) base.add_edge(u, v);
        for (VertexSet mask = 0; mask <= full_set(n - 1); ++mask) {
            Graph g = base;
            g.adj[static_cast<std::size_t>(n - 1)] = mask;
            for_each_member(mask, [&](int v) { g.adj[static_cast<std::size_t>(v)] |= vbit(n - 1); });
            const std::uint64_t code = canonical_code(g);
            found.emplace(code, std::move(g));
        }
    }
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace detail

// All graphs of the given order up to isomorphism, in canonical-code order.
// Memoized; intended for desk-scale exhaustive corpora (order <= 9).
inline const std::vector<Graph>& all_graphs_of_order(int n) {
    if (n < 1 || n > 9) fail(Errc::TooLarge, "exhaustive generation supports order 1..9");
    static std::mutex mu;
    static std::vector<std::vector<Graph>> cache;  // cache[m] holds order m+1
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back({Graph(1)});
    while (static_cast<int>(cache.size()) < n)
        cache.push_back(detail::augment_all(cache.back(), static_cast<int>(cache.size()) + 1));
    return cache[static_cast<std::size_t>(n - 1)];
}

inline std::vector<Graph> connected_graphs_of_order(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs_of_order(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

// Graphs admitted by the realizability census: no isolated vertices and no
// K_2 components.
inline std::vector<Graph> census_graphs_of_order(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs_of_order(n)) {
        if (has_isolated_vertex(g)) continue;
        bool k2 = false;
        for (VertexSet comp : components(g))
            if (set_size(comp) == 2) k2 = true;
        if (!k2) out.push_back(g);
    }
    return out;
}

}  // namespace tdsr
