#pragma once

#include <atomic>
#include <exception>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tdsr/families.hpp"
#include "tdsr/graph_gen.hpp"
#include "tdsr/recognize.hpp"
#include "tdsr/reconfig.hpp"

namespace tdsr {

// One mechanically checked claim instance. pass iff expected == computed.
struct VerdictRecord {
    std::string claim_id;
    std::string instance;
    std::string expected;
    std::string computed;
    bool pass = false;
};

namespace detail {

inline VerdictRecord make_verdict(std::string claim, std::string instance, std::string expected, std::string computed) {
    VerdictRecord v{std::move(claim), std::move(instance), std::move(expected), std::move(computed), false};
    v.pass = v.expected == v.computed;
    return v;
}

// Deterministic index-ordered parallel map; results identical for any jobs.
template <typename R, typename F>
inline std::vector<R> parallel_map(std::size_t count, int jobs, F&& fn) {
    std::vector<R> out(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> workers;
    const int nthreads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
    for (int t = 0; t < nthreads; ++t)
        workers.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace detail

// Runs of consecutive members around C_n = (0, 1, ..., n-1), each with the
// length of the vacant stretch that follows it.
struct CycleRun {
    int start = 0;  // first member of the run
    int len = 0;
    int gap = 0;    // vacant vertices following the run
};

inline std::vector<CycleRun> cycle_runs(int n, VertexSet s) {
    if (s == 0 || s == full_set(n)) fail(Errc::BadParameter, "set must be a proper nonempty subset");
    int anchor = 0;
    while (!(set_contains(s, anchor) && !set_contains(s, (anchor + n - 1) % n))) ++anchor;
    std::vector<CycleRun> runs;
    int pos = anchor;
    do {
        CycleRun run;
        run.start = pos;
        while (set_contains(s, pos % n)) {
            ++run.len;
            ++pos;
        }
        while (!set_contains(s, pos % n)) {
            ++run.gap;
            ++pos;
        }
        pos %= n;
        runs.push_back(run);
    } while (pos != anchor);
    return runs;
}

inline bool induces_only_p2(int n, VertexSet s) {
    for (const CycleRun& run : cycle_runs(n, s))
        if (run.len != 2) return false;
    return true;
}

// Stem theorem: for connected G of order >= 3 with k = Gamma_t(G),
// D_k^t(G) is connected iff the stems form a TDS; equivalently it is
// disconnected iff G has at least two MTDSs.
inline VerdictRecord verify_stem_theorem(const Graph& g, const std::string& instance) {
    if (g.n < 3) fail(Errc::BadParameter, "needs order >= 3");
    if (!is_connected(g)) fail(Errc::NotConnected, "needs a connected graph");
    const DominationProfile prof = domination_profile(g);
    const bool stems_tds = detail::is_tds_unchecked(g, stems(g));
    const bool connected_at_Gamma = detail::count_components(g, prof.Gamma_t, kDefaultStateCap) <= 1;
    const bool multi_mtds = prof.num_mtds >= 2;
    const auto fmt = [](bool c, bool m) {
        return std::string("connected=") + (c ? "1" : "0") + ";multi_mtds=" + (m ? "1" : "0");
    };
    return detail::make_verdict("stem_theorem", instance, fmt(stems_tds, !stems_tds), fmt(connected_at_Gamma, multi_mtds));
}

// d0(C_8) = Gamma_t + 2; every other cycle has d0 = Gamma_t + 1.
inline VerdictRecord verify_cycle_d0(int n) {
    if (n < 3 || n > 16) fail(Errc::BadParameter, "cycle budget is 3 <= n <= 16");
    const int expected = Gamma_t_closed(LinearKind::Cycle, n) + (n == 8 ? 2 : 1);
    const int computed = d0(make_cycle(n));
    return detail::make_verdict("cycle_d0", "C_" + std::to_string(n), "d0=" + std::to_string(expected), "d0=" + std::to_string(computed));
}

// d0(P_2) = d0(P_4) = 2 = Gamma_t; otherwise d0 = Gamma_t + 1.
inline VerdictRecord verify_path_d0(int n) {
    if (n < 2 || n > 16) fail(Errc::BadParameter, "path budget is 2 <= n <= 16");
    const int Gamma = Gamma_t_closed(LinearKind::Path, n);
    const int expected = (n == 2 || n == 4) ? Gamma : Gamma + 1;
    const int computed = d0(make_path(n));
    return detail::make_verdict("path_d0", "P_" + std::to_string(n), "d0=" + std::to_string(expected), "d0=" + std::to_string(computed));
}

// The n = 0 (mod 4) cycle lemmas, n = 4k:
//   (i)   D_{2k+1}^t(C_n) is disconnected
//   (ii)  n >= 12: some P_2-MTDS of size 2k+2 has four runs followed by a
//         single vacant vertex
//   (iii) all gamma_t-sets lie in one component of D_{2k+2}^t, and all
//         P_2-MTDSs of size 2k or 2k+2 lie in one component of D_{2k+3}^t
inline std::vector<VerdictRecord> verify_cycle_lemmas(int n) {
    if (n < 8 || n > 16 || n % 4 != 0) fail(Errc::BadParameter, "lemma budget is n in {8,12,16}");
    const Graph g = make_cycle(n);
    const int half = n / 2;  // gamma_t(C_{4k}) = 2k
    const std::string cn = "C_" + std::to_string(n);
    std::vector<VerdictRecord> out;

    const bool disconnected = detail::count_components(g, half + 1, kDefaultStateCap) >= 2;
    out.push_back(detail::make_verdict("cycle_lemma_i", cn, "disconnected=1", std::string("disconnected=") + (disconnected ? "1" : "0")));

    if (n >= 12) {
        bool exists = false;
        for (VertexSet s : all_mtds(g)) {
            if (set_size(s) != half + 2 || !induces_only_p2(n, s)) continue;
            int p2p1 = 0;
            for (const CycleRun& run : cycle_runs(n, s))
                if (run.gap == 1) ++p2p1;
            if (p2p1 == 4) exists = true;
        }
        out.push_back(detail::make_verdict("cycle_lemma_ii", cn, "exists=1", std::string("exists=") + (exists ? "1" : "0")));
    }

    const auto joined = [&](const std::vector<VertexSet>& sets, int k) {
        if (sets.empty()) return true;
        const ComponentInfo first = component_of(g, sets.front(), k);
        for (VertexSet s : sets)
            if (component_of(g, s, k).id != first.id) return false;
        return true;
    };
    const DominationProfile prof = domination_profile(g);
    out.push_back(detail::make_verdict("cycle_lemma_iii_gamma", cn, "joined=1",
                                       std::string("joined=") + (joined(prof.gamma_t_sets, half + 2) ? "1" : "0")));
    std::vector<VertexSet> p2sets;
    for (VertexSet s : all_mtds(g))
        if ((set_size(s) == half || set_size(s) == half + 2) && induces_only_p2(n, s)) p2sets.push_back(s);
    out.push_back(detail::make_verdict("cycle_lemma_iii_p2", cn, "joined=1",
                                       std::string("joined=") + (joined(p2sets, half + 3) ? "1" : "0")));
    return out;
}

// Generalized corona of a base of order r with n leaves in total:
// D_{r+ell}^t is the subset lattice of the leaf set restricted to levels
// 0..ell (so Q_n at ell = n, K_{1,n} at ell = 1).
inline VerdictRecord verify_corona_hypercube(const Graph& base, const std::vector<int>& leaf_counts, int ell, long cap = kDefaultStateCap) {
    int n = 0;
    for (int c : leaf_counts) n += c;
    if (ell < 0 || ell > n) fail(Errc::BadParameter, "ell must lie in 0..n");
    if (n > 12) fail(Errc::CapExceeded, "explicit build budget is n <= 12 leaves");
    const Graph g = make_generalized_corona(base, leaf_counts);
    const ReconGraph recon = build_recon_graph(g, base.n + ell, cap);
    const bool iso = is_isomorphic(recon_to_explicit(recon), explicit_hasse_levels(n, 0, ell));
    std::string counts;
    for (std::size_t i = 0; i < leaf_counts.size(); ++i) counts += (i ? "." : "") + std::to_string(leaf_counts[i]);
    const std::string instance = "base_n=" + std::to_string(base.n) + ";counts=" + counts + ";ell=" + std::to_string(ell);
    return detail::make_verdict("corona_levels", instance, "iso=1", std::string("iso=") + (iso ? "1" : "0"));
}

struct CensusEntry {
    std::string graph_id;
    int n = 0;
    int k = 0;
    std::string family;  // matched families joined by '+', or "-"
};

struct Census {
    std::vector<CensusEntry> entries;
    std::set<int> cycles;  // all m with some D_k^t isomorphic to C_m
    std::set<int> paths;   // all m with some D_k^t isomorphic to P_m
};

// Realizability census over all graphs of order 3..max_n without isolated
// vertices or K_2 components, classifying D_k^t for every gamma_t <= k <= n.
// jobs > 1 classifies graphs in parallel; entries stay in enumeration order.
inline Census survey_small_graphs(int max_n, long cap = kDefaultStateCap, int jobs = 1) {
    if (max_n > 6) fail(Errc::BadParameter, "census budget is max_n <= 6");
    struct GraphCensus {
        std::vector<CensusEntry> entries;
        std::set<int> cycles, paths;
    };
    Census census;
    for (int n = 3; n <= max_n; ++n) {
        const std::vector<Graph> graphs = census_graphs_of_order(n);
        std::vector<GraphCensus> rows = detail::parallel_map<GraphCensus>(graphs.size(), jobs, [&](std::size_t gi) {
            const Graph& g = graphs[gi];
            const std::string id = "n" + std::to_string(n) + "_" + std::to_string(gi) + "_" + code_to_hex(canonical_code(g));
            const int gamma = domination_profile(g).gamma_t;
            GraphCensus out;
            for (int k = gamma; k <= n; ++k) {
                const ExplicitGraph dkt = recon_to_explicit(build_recon_graph(g, k, cap));
                std::string family;
                const auto tag = [&family](const std::string& t) { family += (family.empty() ? "" : "+") + t; };
                if (auto m = matches_cycle(dkt)) {
                    out.cycles.insert(*m);
                    tag("C" + std::to_string(*m));
                }
                if (auto m = matches_path(dkt)) {
                    out.paths.insert(*m);
                    tag("P" + std::to_string(*m));
                }
                if (auto m = matches_star(dkt)) tag("K1_" + std::to_string(*m));
                if (auto m = matches_hypercube(dkt)) tag("Q" + std::to_string(*m));
                if (auto m = matches_full_subgraph_of_qn(dkt)) tag("Q" + std::to_string(m->n) + "L" + std::to_string(m->ell));
                out.entries.push_back({id, n, k, family.empty() ? "-" : family});
            }
            return out;
        });
        for (GraphCensus& row : rows) {
            for (CensusEntry& e : row.entries) census.entries.push_back(std::move(e));
            census.cycles.insert(row.cycles.begin(), row.cycles.end());
            census.paths.insert(row.paths.begin(), row.paths.end());
        }
    }
    return census;
}

struct HuntHit {
    std::string name;
    int d0 = 0;
    int Gamma_t = 0;
};

// Emits the graphs in the stream whose connectivity threshold exceeds
// Gamma_t by at least alpha; hits keep stream order for any jobs value.
inline std::vector<HuntHit> hunt_d0_gap(const std::vector<std::pair<std::string, Graph>>& stream, int alpha,
                                        long cap = kDefaultStateCap, int jobs = 1) {
    std::vector<std::optional<HuntHit>> found = detail::parallel_map<std::optional<HuntHit>>(
        stream.size(), jobs, [&](std::size_t i) -> std::optional<HuntHit> {
            const D0Scan scan = d0_scan(stream[i].second, cap);
            if (scan.d0 - scan.Gamma_t >= alpha) return HuntHit{stream[i].first, scan.d0, scan.Gamma_t};
            return std::nullopt;
        });
    std::vector<HuntHit> hits;
    for (std::optional<HuntHit>& hit : found)
        if (hit) hits.push_back(std::move(*hit));
    return hits;
}

inline std::vector<VerdictRecord> suite_cycles(int max_n = 16) {
    std::vector<VerdictRecord> out;
    for (int n = 3; n <= max_n; ++n) out.push_back(verify_cycle_d0(n));
    for (int n = 8; n <= max_n; n += 4)
        for (VerdictRecord& v : verify_cycle_lemmas(n)) out.push_back(std::move(v));
    return out;
}

inline std::vector<VerdictRecord> suite_paths(int max_n = 16) {
    std::vector<VerdictRecord> out;
    for (int n = 2; n <= max_n; ++n) out.push_back(verify_path_d0(n));
    return out;
}

namespace detail {

inline std::string corpus_instance(int n, std::size_t i, const Graph& g) {
    return "n=" + std::to_string(n) + ";i=" + std::to_string(i) + ";code=" + code_to_hex(canonical_code(g));
}

}  // namespace detail

inline std::vector<VerdictRecord> suite_stems(int max_n = 8, int jobs = 1) {
    if (max_n < 3) fail(Errc::BadParameter, "needs max_n >= 3");
    std::vector<VerdictRecord> out;
    for (int n = 3; n <= max_n; ++n) {
        const std::vector<Graph> graphs = connected_graphs_of_order(n);
        std::vector<VerdictRecord> batch = detail::parallel_map<VerdictRecord>(graphs.size(), jobs, [&](std::size_t i) {
            return verify_stem_theorem(graphs[i], detail::corpus_instance(n, i, graphs[i]));
        });
        for (VerdictRecord& v : batch) out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<VerdictRecord> suite_corona() {
    std::vector<VerdictRecord> out;
    const std::vector<Graph> bases = {make_complete(2), make_path(3), make_cycle(4)};
    for (const Graph& base : bases) {
        const std::vector<int> counts(static_cast<std::size_t>(base.n), 1);
        for (int ell = 0; ell <= base.n; ++ell) out.push_back(verify_corona_hypercube(base, counts, ell));
    }
    return out;
}

inline std::vector<VerdictRecord> suite_census(int max_n = 6) {
    const Census census = survey_small_graphs(max_n);
    const auto set_string = [](const std::set<int>& s) {
        std::string out = "{";
        for (int m : s) out += (out.size() > 1 ? "," : "") + std::to_string(m);
        return out + "}";
    };
    std::vector<VerdictRecord> out;
    out.push_back(detail::make_verdict("census_cycles", "order<=" + std::to_string(max_n), "{4,6,8,10}", set_string(census.cycles)));
    out.push_back(detail::make_verdict("census_paths", "order<=" + std::to_string(max_n), "{1,3}", set_string(census.paths)));
    return out;
}

// Per-graph bound and characterization checks over the exhaustive connected
// corpus:
//   range      Gamma_t <= d0 <= n
//   lower_iff  d0 = Gamma_t iff G has exactly one MTDS iff stems form a TDS
//   upper_iff  d0 = n iff Gamma_t = n-1 iff the odd perfect-matching structure
//   thm_min    Gamma_t < n-1 implies d0 <= min(n-1, Gamma_t + gamma_t)
//   gamma_bd   3 gamma_t <= 2n
//   Gamma_bd   Gamma_t <= n-1, and Gamma_t <= n-delta+1 when delta >= 2
inline VerdictRecord verify_bounds(const Graph& g, const std::string& instance) {
    if (g.n < 3) fail(Errc::BadParameter, "needs order >= 3");
    if (!is_connected(g)) fail(Errc::NotConnected, "needs a connected graph");
    const DominationProfile prof = domination_profile(g);
    const D0Scan scan = d0_scan(g);
    const int n = g.n;
    std::string bad;
    const auto check = [&bad](bool ok, const char* tag) {
        if (!ok) bad += std::string(bad.empty() ? "" : ",") + tag;
    };
    check(prof.Gamma_t <= scan.d0 && scan.d0 <= n, "range");
    const bool stems_tds = detail::is_tds_unchecked(g, stems(g));
    check((scan.d0 == prof.Gamma_t) == (prof.num_mtds == 1) && (prof.num_mtds == 1) == stems_tds, "lower_iff");
    check((scan.d0 == n) == (prof.Gamma_t == n - 1) && (prof.Gamma_t == n - 1) == has_Gamma_n_minus_1_structure(g), "upper_iff");
    if (prof.Gamma_t < n - 1) check(scan.d0 <= std::min(n - 1, prof.Gamma_t + prof.gamma_t), "thm_min");
    check(3 * prof.gamma_t <= 2 * n, "gamma_bd");
    check(prof.Gamma_t <= n - 1 && (min_degree(g) < 2 || prof.Gamma_t <= n - min_degree(g) + 1), "Gamma_bd");
    return detail::make_verdict("bounds", instance, "ok", bad.empty() ? "ok" : "fail(" + bad + ")");
}

inline std::vector<VerdictRecord> suite_bounds(int max_n = 8, int jobs = 1) {
    if (max_n < 3) fail(Errc::BadParameter, "needs max_n >= 3");
    std::vector<VerdictRecord> out;
    for (int n = 3; n <= max_n; ++n) {
        const std::vector<Graph> graphs = connected_graphs_of_order(n);
        std::vector<VerdictRecord> batch = detail::parallel_map<VerdictRecord>(graphs.size(), jobs, [&](std::size_t i) {
            return verify_bounds(graphs[i], detail::corpus_instance(n, i, graphs[i]));
        });
        for (VerdictRecord& v : batch) out.push_back(std::move(v));
    }
    return out;
}

inline std::string verdicts_to_csv(const std::vector<VerdictRecord>& verdicts) {
    std::string out = "claim_id,instance,expected,computed,pass\n";
    for (const VerdictRecord& v : verdicts)
        out += v.claim_id + "," + v.instance + "," + v.expected + "," + v.computed + "," + (v.pass ? "true" : "false") + "\n";
    return out;
}

inline std::string verdicts_to_json(const std::vector<VerdictRecord>& verdicts) {
    std::string out = "[";
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const VerdictRecord& v = verdicts[i];
        if (i) out += ',';
        out += "{\"claim_id\":\"" + v.claim_id + "\",\"instance\":\"" + v.instance + "\",\"expected\":\"" + v.expected +
               "\",\"computed\":\"" + v.computed + "\",\"pass\":" + (v.pass ? "true" : "false") + "}";
    }
    return out + "]";
}

inline std::string census_to_csv(const Census& census) {
    std::string out = "graph,n,k,family\n";
    for (const CensusEntry& e : census.entries)
        out += e.graph_id + "," + std::to_string(e.n) + "," + std::to_string(e.k) + "," + e.family + "\n";
    return out;
}

inline std::string census_to_json(const Census& census) {
    const auto set_json = [](const std::set<int>& s) {
        std::string out = "[";
        for (int m : s) out += (out.size() > 1 ? "," : "") + std::to_string(m);
        return out + "]";
    };
    std::string out = "{\"entries\":[";
    for (std::size_t i = 0; i < census.entries.size(); ++i) {
        const CensusEntry& e = census.entries[i];
        if (i) out += ',';
        out += "{\"graph\":\"" + e.graph_id + "\",\"n\":" + std::to_string(e.n) + ",\"k\":" + std::to_string(e.k) +
               ",\"family\":\"" + e.family + "\"}";
    }
    out += "],\"cycles\":" + set_json(census.cycles) + ",\"paths\":" + set_json(census.paths) + "}";
    return out;
}

inline std::string hunt_to_csv(const std::vector<HuntHit>& hits) {
    std::string out = "name,d0,Gamma_t\n";
    for (const HuntHit& h : hits) out += h.name + "," + std::to_string(h.d0) + "," + std::to_string(h.Gamma_t) + "\n";
    return out;
}

inline std::string hunt_to_json(const std::vector<HuntHit>& hits) {
    std::string out = "[";
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i) out += ',';
        out += "{\"name\":\"" + hits[i].name + "\",\"d0\":" + std::to_string(hits[i].d0) + ",\"Gamma_t\":" + std::to_string(hits[i].Gamma_t) + "}";
    }
    return out + "]";
}

}  // namespace tdsr
