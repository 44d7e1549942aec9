// tdsr: exact total-domination reconfiguration toolkit.
//
// Subcommands: profile, build, connectivity, d0, path, component, verify,
// survey, hunt. Machine output (JSON or CSV) goes to stdout and is
// byte-identical across runs; human summaries go to stderr. Exit codes:
// 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tdsr/tdsr.hpp"

namespace {

struct UsageError {
    std::string msg;
};

tdsr::Graph load_graph(const std::string& family, const std::string& input) {
    if (!family.empty() && !input.empty()) throw UsageError{"--family and --input are mutually exclusive"};
    if (!family.empty()) return tdsr::graph_from_family(family);
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) tdsr::fail(tdsr::Errc::BadParameter, "cannot read " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        return tdsr::from_edge_list(buf.str());
    }
    throw UsageError{"a graph is required: pass --family or --input"};
}

int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw UsageError{what + ": bad number \"" + text + "\""};
    }
    if (used != text.size()) throw UsageError{what + ": bad number \"" + text + "\""};
    return value;
}

// hunt stream specs: cycles:LO..HI, paths:LO..HI, randomtrees:N,COUNT
std::vector<std::pair<std::string, tdsr::Graph>> load_stream(const std::string& spec, unsigned seed) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError{"stream spec needs parameters, e.g. cycles:3..16"};
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    std::vector<std::pair<std::string, tdsr::Graph>> out;
    if (kind == "cycles" || kind == "paths") {
        const std::size_t dots = rest.find("..");
        if (dots == std::string::npos) throw UsageError{"range spec looks like 3..16"};
        const int lo = parse_int(rest.substr(0, dots), "range start");
        const int hi = parse_int(rest.substr(dots + 2), "range end");
        for (int n = lo; n <= hi; ++n) {
            if (kind == "cycles")
                out.emplace_back("C_" + std::to_string(n), tdsr::make_cycle(n));
            else
                out.emplace_back("P_" + std::to_string(n), tdsr::make_path(n));
        }
        return out;
    }
    if (kind == "randomtrees") {
        const std::size_t comma = rest.find(',');
        if (comma == std::string::npos) throw UsageError{"randomtrees spec looks like randomtrees:10,50"};
        const int max_n = parse_int(rest.substr(0, comma), "randomtrees order");
        const int count = parse_int(rest.substr(comma + 1), "randomtrees count");
        if (max_n < 3) throw UsageError{"randomtrees needs max order >= 3"};
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> order(3, max_n);
        for (int i = 0; i < count; ++i) {
            const int n = order(rng);
            out.emplace_back("T" + std::to_string(n) + "_" + std::to_string(i), tdsr::random_tree(n, rng));
        }
        return out;
    }
    throw UsageError{"unknown stream \"" + kind + "\" (cycles, paths, randomtrees)"};
}

void emit(const std::string& machine) { std::cout << machine << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for total domination reconfiguration"};
    app.require_subcommand(1);

    std::string family, input, from_list, to_list, format;
    int k = -1, max_n = -1, jobs = 1, alpha = 2;
    long cap = tdsr::kDefaultStateCap;
    unsigned seed = 0;

    const auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "generated family, e.g. cycle:8, spider:2,2,2, corona:complete:2:1,1");
        cmd->add_option("--input", input, "edge-list file (header \"n <order>\", lines \"u v\")");
    };

    CLI::App* profile = app.add_subcommand("profile", "total domination profile of a graph");
    add_graph_opts(profile);
    profile->add_option("--format", format, "json or csv");

    CLI::App* build = app.add_subcommand("build", "build the explicit reconfiguration graph D_k^t");
    add_graph_opts(build);
    build->add_option("--k", k, "cardinality threshold")->required();
    build->add_option("--cap", cap, "state cap");
    build->add_option("--format", format, "json or dot");

    CLI::App* conn = app.add_subcommand("connectivity", "component structure of D_k^t without building it");
    add_graph_opts(conn);
    conn->add_option("--k", k, "cardinality threshold")->required();
    conn->add_option("--cap", cap, "state cap");

    CLI::App* d0cmd = app.add_subcommand("d0", "connectivity threshold d0");
    add_graph_opts(d0cmd);
    d0cmd->add_option("--cap", cap, "state cap");

    CLI::App* path = app.add_subcommand("path", "shortest reconfiguration sequence between two sets");
    add_graph_opts(path);
    path->add_option("--from", from_list, "start set, comma-separated vertices")->required();
    path->add_option("--to", to_list, "target set, comma-separated vertices")->required();
    path->add_option("--k", k, "cardinality threshold")->required();
    path->add_option("--cap", cap, "state cap");

    CLI::App* comp = app.add_subcommand("component", "component id and size of a set in D_k^t");
    add_graph_opts(comp);
    comp->add_option("--from", from_list, "set, comma-separated vertices")->required();
    comp->add_option("--k", k, "cardinality threshold")->required();
    comp->add_option("--cap", cap, "state cap");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "cycles, paths, stems, corona, census or bounds")->required();
    verify->add_option("--max-n", max_n, "order budget");
    verify->add_option("--jobs", jobs, "parallel instances (output is unchanged)");
    verify->add_option("--format", format, "csv or json");

    CLI::App* survey = app.add_subcommand("survey", "realizability census of small graphs");
    survey->add_option("--max-n", max_n, "order budget (default 6)");
    survey->add_option("--cap", cap, "state cap");
    survey->add_option("--jobs", jobs, "parallel instances (output is unchanged)");
    survey->add_option("--format", format, "csv or json");

    CLI::App* hunt = app.add_subcommand("hunt", "search a family stream for graphs with d0 - Gamma_t >= alpha");
    hunt->add_option("--family", family, "stream: cycles:3..16, paths:2..16, randomtrees:10,50")->required();
    hunt->add_option("--alpha", alpha, "gap target (default 2)");
    hunt->add_option("--seed", seed, "seed for random families");
    hunt->add_option("--cap", cap, "state cap");
    hunt->add_option("--jobs", jobs, "parallel instances (output is unchanged)");
    hunt->add_option("--format", format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // verdict and census logs default to CSV, single results to JSON
    if (format.empty()) format = (*verify || *survey || *hunt) ? "csv" : "json";

    try {
        if (*profile) {
            const tdsr::Graph g = load_graph(family, input);
            const tdsr::DominationProfile p = tdsr::domination_profile(g);
            if (format == "csv")
                emit("gamma_t,Gamma_t,sigma,lambda,num_mtds\n" + std::to_string(p.gamma_t) + "," + std::to_string(p.Gamma_t) + "," +
                     std::to_string(p.sigma) + "," + std::to_string(p.lambda) + "," + std::to_string(p.num_mtds));
            else if (format == "json")
                emit(tdsr::profile_to_json(p));
            else
                throw UsageError{"profile supports --format json or csv"};
            std::cerr << "gamma_t = " << p.gamma_t << ", Gamma_t = " << p.Gamma_t << ", " << p.num_mtds << " minimal sets\n";
        } else if (*build) {
            const tdsr::Graph g = load_graph(family, input);
            const tdsr::ReconGraph r = tdsr::build_recon_graph(g, k, cap);
            if (format == "dot")
                std::cout << tdsr::recon_to_dot(r);
            else if (format == "json")
                emit(tdsr::recon_to_json(r));
            else
                throw UsageError{"build supports --format json or dot"};
            std::cerr << "D_" << k << "^t: " << r.vertices.size() << " sets, " << r.edges.size() << " moves"
                      << (r.k_below_gamma ? " (k below gamma_t: empty)" : "") << "\n";
        } else if (*conn) {
            const tdsr::Graph g = load_graph(family, input);
            const tdsr::ConnectivityReport rep = tdsr::connectivity(g, k, cap);
            emit(tdsr::connectivity_to_json(rep));
            std::cerr << "D_" << k << "^t has " << rep.num_components << " component(s) on " << rep.num_vertices << " set(s)\n";
        } else if (*d0cmd) {
            const tdsr::Graph g = load_graph(family, input);
            const tdsr::D0Scan scan = tdsr::d0_scan(g, cap);
            emit("{\"d0\":" + std::to_string(scan.d0) + ",\"Gamma_t\":" + std::to_string(scan.Gamma_t) +
                 ",\"gamma_t\":" + std::to_string(scan.gamma_t) + "}");
            std::cerr << "d0 = " << scan.d0 << " (gamma_t = " << scan.gamma_t << ", Gamma_t = " << scan.Gamma_t << ")\n";
        } else if (*path) {
            const tdsr::Graph g = load_graph(family, input);
            const tdsr::VertexSet s = tdsr::parse_vertex_list(from_list, g.n);
            const tdsr::VertexSet t = tdsr::parse_vertex_list(to_list, g.n);
            const auto witness = tdsr::reconfigure(g, s, t, k, cap);
            if (!witness) {
                emit("{\"found\":false}");
                std::cerr << "no reconfiguration sequence within k = " << k << "\n";
            } else {
                std::string steps;
                for (std::size_t i = 0; i < witness->steps.size(); ++i)
                    steps += (i ? "," : "") + ("\"" + tdsr::set_to_hex(witness->steps[i]) + "\"");
                emit("{\"found\":true,\"length\":" + std::to_string(witness->steps.size() - 1) + ",\"steps\":[" + steps + "]}");
                std::cerr << witness->steps.size() - 1 << " moves through " << witness->steps.size() << " sets\n";
            }
        } else if (*comp) {
            const tdsr::Graph g = load_graph(family, input);
            const tdsr::VertexSet s = tdsr::parse_vertex_list(from_list, g.n);
            const tdsr::ComponentInfo info = tdsr::component_of(g, s, k, cap);
            emit("{\"component_id\":\"" + tdsr::set_to_hex(info.id) + "\",\"component_size\":" + std::to_string(info.size) + "}");
            std::cerr << "component " << tdsr::set_to_hex(info.id) << " has " << info.size << " set(s)\n";
        } else if (*verify) {
            std::vector<tdsr::VerdictRecord> verdicts;
            if (suite == "cycles") {
                verdicts = tdsr::suite_cycles(max_n < 0 ? 16 : max_n);
            } else if (suite == "paths") {
                verdicts = tdsr::suite_paths(max_n < 0 ? 16 : max_n);
            } else if (suite == "stems") {
                verdicts = tdsr::suite_stems(max_n < 0 ? 8 : max_n, jobs);
            } else if (suite == "corona") {
                verdicts = tdsr::suite_corona();
            } else if (suite == "census") {
                verdicts = tdsr::suite_census(max_n < 0 ? 6 : max_n);
            } else if (suite == "bounds") {
                verdicts = tdsr::suite_bounds(max_n < 0 ? 8 : max_n, jobs);
            } else {
                throw UsageError{"unknown suite \"" + suite + "\""};
            }
            if (format == "json")
                emit(tdsr::verdicts_to_json(verdicts));
            else if (format == "csv")
                std::cout << tdsr::verdicts_to_csv(verdicts);
            else
                throw UsageError{"verify supports --format csv or json"};
            long pass = 0;
            for (const tdsr::VerdictRecord& v : verdicts) pass += v.pass ? 1 : 0;
            std::cerr << "suite " << suite << ": " << pass << "/" << verdicts.size() << " verdicts pass\n";
            return pass == static_cast<long>(verdicts.size()) ? 0 : 1;
        } else if (*survey) {
            const tdsr::Census census = tdsr::survey_small_graphs(max_n < 0 ? 6 : max_n, cap, jobs);
            if (format == "json")
                emit(tdsr::census_to_json(census));
            else if (format == "csv")
                std::cout << tdsr::census_to_csv(census);
            else
                throw UsageError{"survey supports --format csv or json"};
            std::cerr << census.entries.size() << " classifications, " << census.cycles.size() << " cycle length(s), "
                      << census.paths.size() << " path length(s)\n";
        } else if (*hunt) {
            const auto stream = load_stream(family, seed);
            const auto hits = tdsr::hunt_d0_gap(stream, alpha, cap, jobs);
            if (format == "json")
                emit(tdsr::hunt_to_json(hits));
            else if (format == "csv")
                std::cout << tdsr::hunt_to_csv(hits);
            else
                throw UsageError{"hunt supports --format csv or json"};
            std::cerr << hits.size() << " of " << stream.size() << " graphs reach d0 - Gamma_t >= " << alpha << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.msg << "\n";
        return 2;
    } catch (const tdsr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
