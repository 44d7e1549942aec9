#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "tdsr/domination.hpp"
#include "tdsr/families.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = "cli_capture_" + std::to_string(counter++);
    const std::string out_file = base + ".out", err_file = base + ".err";
    const std::string cmd = std::string(TDSR_CLI_PATH) + " " + args + " >" + out_file + " 2>" + err_file;
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return result;
}

}  // namespace

TEST_CASE("d0 subcommand") {
    const RunResult r = run_cli("d0 --family cycle:8");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "{\"d0\":6,\"Gamma_t\":4,\"gamma_t\":4}\n");

    // byte-identical across runs
    REQUIRE(run_cli("d0 --family cycle:8").out == r.out);
}

TEST_CASE("profile subcommand") {
    const RunResult r = run_cli("profile --family spider:2,2,2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "{\"gamma_t\":4,\"Gamma_t\":6,\"sigma\":3,\"lambda\":3,\"num_mtds\":2}\n");

    const RunResult csv = run_cli("profile --family spider:2,2,2 --format csv");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(csv.out == "gamma_t,Gamma_t,sigma,lambda,num_mtds\n4,6,3,3,2\n");
}

TEST_CASE("build subcommand") {
    const RunResult json = run_cli("build --family cycle:4 --k 3");
    REQUIRE(json.exit_code == 0);
    REQUIRE(json.out ==
            "{\"k\":3,\"vertices\":[\"0x3\",\"0x6\",\"0x9\",\"0xc\",\"0x7\",\"0xb\",\"0xd\",\"0xe\"],"
            "\"edges\":[[0,4],[0,5],[1,4],[1,7],[2,5],[2,6],[3,6],[3,7]],\"components\":1}\n");

    const RunResult dot = run_cli("build --family cycle:4 --k 3 --format dot");
    REQUIRE(dot.exit_code == 0);
    REQUIRE(dot.out ==
            "graph {\n"
            "  0 [label=\"{0,1}\"];\n"
            "  1 [label=\"{1,2}\"];\n"
            "  2 [label=\"{0,3}\"];\n"
            "  3 [label=\"{2,3}\"];\n"
            "  4 [label=\"{0,1,2}\"];\n"
            "  5 [label=\"{0,1,3}\"];\n"
            "  6 [label=\"{0,2,3}\"];\n"
            "  7 [label=\"{1,2,3}\"];\n"
            "  0 -- 4;\n"
            "  0 -- 5;\n"
            "  1 -- 4;\n"
            "  1 -- 7;\n"
            "  2 -- 5;\n"
            "  2 -- 6;\n"
            "  3 -- 6;\n"
            "  3 -- 7;\n"
            "}\n");
}

TEST_CASE("path subcommand") {
    const RunResult r = run_cli("path --family cycle:4 --from 0,1 --to 2,3 --k 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "{\"found\":true,\"length\":4,\"steps\":[\"0x3\",\"0x7\",\"0x6\",\"0xe\",\"0xc\"]}\n");

    const RunResult blocked = run_cli("path --family cycle:8 --from 0,1,4,5 --to 2,3,6,7 --k 5");
    REQUIRE(blocked.exit_code == 0);
    REQUIRE(blocked.out == "{\"found\":false}\n");
}

TEST_CASE("component and connectivity subcommands") {
    const std::size_t tds_count = tdsr::all_tds(tdsr::make_cycle(8), 6).size();
    const RunResult comp = run_cli("component --family cycle:8 --from 0,1,4,5 --k 6");
    REQUIRE(comp.exit_code == 0);
    REQUIRE(comp.out == "{\"component_id\":\"0x33\",\"component_size\":" + std::to_string(tds_count) + "}\n");

    const RunResult conn = run_cli("connectivity --family spider:2,2,2 --k 6");
    REQUIRE(conn.exit_code == 0);
    REQUIRE(conn.out.find("\"is_connected\":false") != std::string::npos);
    REQUIRE(conn.out.find("\"isolated_gamma_sets\":[\"0x7e\"]") != std::string::npos);
}

TEST_CASE("edge list input") {
    const std::string path = "cli_input_p4.txt";
    {
        std::ofstream out(path);
        out << "# the path on four vertices\nn 4\n0 1\n1 2\n2 3\n";
    }
    const RunResult r = run_cli("d0 --input " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "{\"d0\":2,\"Gamma_t\":2,\"gamma_t\":2}\n");
    std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
    const RunResult cycles = run_cli("verify cycles --max-n 10");
    REQUIRE(cycles.exit_code == 0);
    REQUIRE(cycles.out.find("claim_id,instance,expected,computed,pass\n") == 0);
    REQUIRE(cycles.out.find("cycle_d0,C_8,d0=6,d0=6,true\n") != std::string::npos);
    REQUIRE(cycles.out.find(",false\n") == std::string::npos);

    // --jobs never changes the output
    const RunResult seq = run_cli("verify stems --max-n 6");
    const RunResult par = run_cli("verify stems --max-n 6 --jobs 4");
    REQUIRE(seq.exit_code == 0);
    REQUIRE(seq.out == par.out);

    const RunResult json = run_cli("verify paths --max-n 8 --format json");
    REQUIRE(json.exit_code == 0);
    REQUIRE(json.out.rfind("[{", 0) == 0);
    REQUIRE(json.out.find("\"pass\":false") == std::string::npos);
}

TEST_CASE("survey subcommand") {
    const RunResult r = run_cli("survey --max-n 4 --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("graph,n,k,family\n") == 0);
    REQUIRE(r.out.find(",4,3,C8\n") != std::string::npos);  // D_3^t(C_4)

    const RunResult json = run_cli("survey --max-n 4 --format json");
    REQUIRE(json.exit_code == 0);
    REQUIRE(json.out.find("\"cycles\":[4,6,8]") != std::string::npos);
    REQUIRE(json.out.find("\"paths\":[1,3]") != std::string::npos);

    // census output is byte-stable, including under --jobs
    const std::string baseline = run_cli("survey --max-n 5 --format csv").out;
    REQUIRE(run_cli("survey --max-n 5 --format csv").out == baseline);
    REQUIRE(run_cli("survey --max-n 5 --format csv --jobs 4").out == baseline);
}

TEST_CASE("hunt subcommand") {
    const RunResult r = run_cli("hunt --family cycles:3..12 --alpha 2 --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "name,d0,Gamma_t\nC_8,6,4\n");

    const RunResult trees = run_cli("hunt --family randomtrees:8,20 --alpha 1 --seed 7");
    REQUIRE(trees.exit_code == 0);
    REQUIRE(run_cli("hunt --family randomtrees:8,20 --alpha 1 --seed 7").out == trees.out);  // seeded determinism
    REQUIRE(run_cli("hunt --family randomtrees:8,20 --alpha 1 --seed 7 --jobs 3").out == trees.out);
}

TEST_CASE("exit codes") {
    REQUIRE(run_cli("d0 --family cycle:2").exit_code == 1);           // BadParameter
    REQUIRE(run_cli("profile --input does_not_exist").exit_code == 1);
    REQUIRE(run_cli("path --family cycle:4 --from 0,9 --to 2,3 --k 3").exit_code == 1);
    REQUIRE(run_cli("path --family cycle:4 --from 0,2 --to 2,3 --k 3").exit_code == 1);  // NotATds
    REQUIRE(run_cli("d0").exit_code == 2);                            // no graph given
    REQUIRE(run_cli("d0 --family cycle:8 --input x").exit_code == 2);
    REQUIRE(run_cli("frobnicate").exit_code == 2);
    REQUIRE(run_cli("verify nonsense").exit_code == 2);
    REQUIRE(run_cli("hunt --family cycles:a..b --alpha 2").exit_code == 2);
    REQUIRE(run_cli("hunt --family bogus:3..16 --alpha 2").exit_code == 2);
    REQUIRE(run_cli("--help").exit_code == 0);
}
