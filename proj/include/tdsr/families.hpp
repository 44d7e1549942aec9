#pragma once

#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tdsr/graph.hpp"

namespace tdsr {

// Symbolic description of a generated graph family. Vertex numbering is part
// of the contract:
//   path/cycle    numbered along the walk
//   star          center 0, leaves 1..m
//   double star   centers 0~1, then the r leaves of 0, then the t leaves of 1
//   spider        center 0, legs laid out consecutively, inner to tip
//   corona        base vertices first, then leaves grouped by base vertex
//   hypercube     vertex = subset mask, edges flip one bit
//   union         parts concatenated in order
struct FamilySpec {
    enum class Kind { Path, Cycle, Star, Complete, DoubleStar, Spider, GeneralizedCorona, Hypercube, DisjointUnion };

    Kind kind = Kind::Path;
    std::vector<int> params;           // sizes / leg lengths / leaf counts per kind
    std::optional<Graph> base;         // GeneralizedCorona only
    std::vector<FamilySpec> parts;     // DisjointUnion only
};

inline Graph make_path(int n) {
    if (n < 1) fail(Errc::BadParameter, "path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph make_cycle(int n) {
    if (n < 3) fail(Errc::BadParameter, "cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph make_star(int leaves) {
    if (leaves < 1) fail(Errc::BadParameter, "star needs at least 1 leaf");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph make_complete(int n) {
    if (n < 1) fail(Errc::BadParameter, "complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph make_double_star(int r, int t) {
    if (r < 1 || t < 1) fail(Errc::BadParameter, "double star needs r,t >= 1");
    Graph g(r + t + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < r; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < t; ++i) g.add_edge(1, 2 + r + i);
    return g;
}

inline Graph make_spider(const std::vector<int>& legs) {
    if (legs.empty()) fail(Errc::BadParameter, "spider needs at least 1 leg");
    int order = 1;
    for (int len : legs) {
        if (len < 1) fail(Errc::BadParameter, "spider leg lengths must be >= 1");
        order += len;
    }
    Graph g(order);
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

inline Graph make_generalized_corona(const Graph& base, const std::vector<int>& leaf_counts) {
    if (has_isolated_vertex(base) || base.n == 0) fail(Errc::BadParameter, "corona base must have no isolated vertices");
    if (static_cast<int>(leaf_counts.size()) != base.n) fail(Errc::BadParameter, "corona needs one leaf count per base vertex");
    int order = base.n;
    for (int c : leaf_counts) {
        if (c < 1) fail(Errc::BadParameter, "corona leaf counts must be >= 1");
        order += c;
    }
    Graph g(order);
    for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
    int next = base.n;
    for (int v = 0; v < base.n; ++v)
        for (int i = 0; i < leaf_counts[static_cast<std::size_t>(v)]; ++i) g.add_edge(v, next++);
    return g;
}

inline Graph make_hypercube(int dim) {
    if (dim < 0) fail(Errc::BadParameter, "hypercube dimension must be >= 0");
    if (dim > 4) fail(Errc::OrderTooLarge, "hypercube Q_" + std::to_string(dim) + " exceeds the order cap");
    Graph g(1 << dim);
    for (int v = 0; v < g.n; ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v >> b & 1)) g.add_edge(v, v | (1 << b));
    return g;
}

inline Graph generate(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    const auto one = [&](const char* what) {
        if (spec.params.size() != 1) fail(Errc::BadParameter, std::string(what) + " takes one parameter");
        return spec.params[0];
    };
    switch (spec.kind) {
        case K::Path: return make_path(one("path"));
        case K::Cycle: return make_cycle(one("cycle"));
        case K::Star: return make_star(one("star"));
        case K::Complete: return make_complete(one("complete"));
        case K::DoubleStar:
            if (spec.params.size() != 2) fail(Errc::BadParameter, "double star takes two parameters");
            return make_double_star(spec.params[0], spec.params[1]);
        case K::Spider: return make_spider(spec.params);
        case K::GeneralizedCorona:
            if (!spec.base) fail(Errc::BadParameter, "corona needs a base graph");
            return make_generalized_corona(*spec.base, spec.params);
        case K::Hypercube: return make_hypercube(one("hypercube"));
        case K::DisjointUnion: {
            Graph g(0);
            for (const FamilySpec& part : spec.parts) g = disjoint_union(g, generate(part));
            return g;
        }
    }
    fail(Errc::BadParameter, "unknown family kind");
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail(Errc::BadParameter, what + ": bad number \"" + tok + "\"");
        }
        if (used != tok.size()) fail(Errc::BadParameter, what + ": bad number \"" + tok + "\"");
        out.push_back(v);
        if (next == text.size()) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace detail

// CLI shorthand mirroring FamilySpec, e.g. "cycle:8", "doublestar:2,3",
// "spider:2,2,2", "corona:complete:2:1,1", "union:cycle:3+cycle:3".
inline FamilySpec parse_family(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    FamilySpec spec;
    using K = FamilySpec::Kind;
    if (kind == "union") {
        spec.kind = K::DisjointUnion;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t next = rest.find('+', pos);
            if (next == std::string::npos) next = rest.size();
            spec.parts.push_back(parse_family(rest.substr(pos, next - pos)));
            if (next == rest.size()) break;
            pos = next + 1;
        }
        if (spec.parts.empty()) fail(Errc::BadParameter, "union needs at least one part");
        return spec;
    }
    if (kind == "corona") {
        // corona:<base kind>:<base params>:<leaf counts>
        const std::size_t last = rest.rfind(':');
        if (last == std::string::npos) fail(Errc::BadParameter, "corona spec needs base and leaf counts");
        spec.kind = K::GeneralizedCorona;
        spec.base = generate(parse_family(rest.substr(0, last)));
        spec.params = detail::parse_int_list(rest.substr(last + 1), "corona leaf counts");
        return spec;
    }
    if (kind == "path") spec.kind = K::Path;
    else if (kind == "cycle") spec.kind = K::Cycle;
    else if (kind == "star") spec.kind = K::Star;
    else if (kind == "complete") spec.kind = K::Complete;
    else if (kind == "doublestar") spec.kind = K::DoubleStar;
    else if (kind == "spider") spec.kind = K::Spider;
    else if (kind == "hypercube") spec.kind = K::Hypercube;
    else fail(Errc::BadParameter, "unknown family \"" + kind + "\"");
    spec.params = detail::parse_int_list(rest, kind + " parameters");
    return spec;
}

inline Graph graph_from_family(const std::string& text) { return generate(parse_family(text)); }

// Uniform random labelled tree via a Pruefer sequence; deterministic per rng state.
inline Graph random_tree(int n, std::mt19937& rng) {
    if (n < 1) fail(Errc::BadParameter, "tree needs n >= 1");
    if (n > kMaxOrder) fail(Errc::OrderTooLarge, "tree order exceeds cap");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq) x = pick(rng);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        g.add_edge(leaf, x);
        if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            while (deg[static_cast<std::size_t>(++ptr)] != 1) {}
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

}  // namespace tdsr
