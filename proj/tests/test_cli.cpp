// End-to-end checks of the installed command surface, driven through the
// real binary.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "mmst/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MMST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (std::fgets(buf, sizeof(buf), pipe)) out += buf;
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/mmst_cli_test_") + name;
}

void write_tmp(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

}  // namespace

TEST_CASE("build y-variant on the parabola emits the sorted path") {
    const std::string in = tmp_path("parabola.json");
    const std::string out = tmp_path("parabola_tree.json");
    write_tmp(in, R"({"root":0,"points":[[0,0],[1,1],[2,4],[3,9]]})");
    const auto res = run_cli("build --input " + in + " --variant y --direction 90 --out " + out);
    CHECK(res.exit_code == 0);
    const auto tree = mmst::parse_graph_json(mmst::read_file(out));
    CHECK(tree.edges == std::vector<mmst::Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("uniform build on two points costs the pair distance") {
    const std::string in = tmp_path("two.csv");
    const std::string out = tmp_path("two_tree.json");
    write_tmp(in, "0,0\n3,4\n");
    const auto res = run_cli("build --input " + in + " --variant uniform --out " + out);
    CHECK(res.exit_code == 0);
    CHECK(mmst::read_file(out).find("\"cost\": 5.0") != std::string::npos);
}

TEST_CASE("xy build rejects axis-resident points with exit 2") {
    const std::string in = tmp_path("axis_point.json");
    write_tmp(in, R"({"root":0,"points":[[0,0],[0,5],[1,2]]})");
    const auto res = run_cli("build --input " + in + " --variant xy --direction 90 --out " +
                             tmp_path("never.json"));
    CHECK(res.exit_code == 2);
}

TEST_CASE("collinear inputs exit 2 unless explicitly allowed") {
    const std::string in = tmp_path("collinear.json");
    write_tmp(in, R"({"root":0,"points":[[0,0],[1,1],[2,2],[5,0.5]]})");
    const std::string out = tmp_path("collinear_tree.json");
    const auto strict =
        run_cli("build --input " + in + " --variant y --direction 90 --out " + out);
    CHECK(strict.exit_code == 2);
    const auto lax = run_cli("build --input " + in +
                             " --variant y --direction 90 --allow-degenerate --out " + out);
    CHECK(lax.exit_code == 0);
}

TEST_CASE("missing input file exits 1") {
    const auto res = run_cli("build --input /nonexistent/nope.json --variant y --direction 90 "
                             "--out /tmp/mmst_never.json");
    CHECK(res.exit_code == 1);
}

TEST_CASE("direction flag rules per variant") {
    const std::string in = tmp_path("dirrules.json");
    write_tmp(in, R"({"root":0,"points":[[0,0],[1,2]]})");
    CHECK(run_cli("build --input " + in + " --variant y --out /tmp/mmst_never.json").exit_code ==
          2);
    CHECK(run_cli("build --input " + in +
                  " --variant uniform --direction 10 --out /tmp/mmst_never.json")
              .exit_code == 2);
}

TEST_CASE("build output recognizes as monotone through the CLI") {
    const std::string in = tmp_path("roundtrip.json");
    const std::string out = tmp_path("roundtrip_tree.json");
    write_tmp(in, R"({"root":0,"points":[[0,0],[1,1],[-1,2.5],[0.5,-1],[3,0.25]]})");
    REQUIRE(run_cli("build --input " + in + " --variant uniform --out " + out).exit_code == 0);
    const auto rec = run_cli("recognize --input " + out + " --variant uniform");
    CHECK(rec.exit_code == 0);
    CHECK(rec.out.substr(0, 4) == "true");
}

TEST_CASE("recognize answers false with exit 0") {
    const std::string in = tmp_path("notmono.json");
    write_tmp(in, R"({"root":0,"points":[[0,0],[1,1],[2,0.5]],"edges":[[0,1],[1,2]]})");
    const auto res = run_cli("recognize --input " + in + " --variant y --direction 90");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "false\n");
    const auto uni = run_cli("recognize --input " + in + " --variant uniform");
    CHECK(uni.exit_code == 0);
    CHECK(uni.out.substr(0, 4) == "true");
}

TEST_CASE("oracle subcommand matches build on the same input") {
    const std::string in = tmp_path("oracle_match.json");
    write_tmp(in, R"({"root":0,"points":[[0,0],[1,0.1],[2,-0.1]]})");
    const std::string a = tmp_path("oracle_fast.json");
    const std::string b = tmp_path("oracle_ref.json");
    REQUIRE(run_cli("build --input " + in + " --variant uniform --out " + a).exit_code == 0);
    REQUIRE(run_cli("oracle --input " + in + " --variant uniform --out " + b).exit_code == 0);
    CHECK(mmst::parse_graph_json(mmst::read_file(a)).edges ==
          mmst::parse_graph_json(mmst::read_file(b)).edges);
}

TEST_CASE("svg emission writes the expected element counts") {
    const std::string in = tmp_path("svg.json");
    const std::string out = tmp_path("svg_tree.json");
    const std::string svg = tmp_path("tree.svg");
    write_tmp(in, R"({"root":0,"points":[[0,0],[1,1],[-1,2.5],[0.5,-1]]})");
    REQUIRE(run_cli("build --input " + in + " --variant y --direction 90 --out " + out +
                    " --svg " + svg)
                .exit_code == 0);
    const std::string content = mmst::read_file(svg);
    std::size_t circles = 0, lines = 0, pos = 0;
    while ((pos = content.find("<circle ", pos)) != std::string::npos) {
        ++circles;
        pos += 8;
    }
    pos = 0;
    while ((pos = content.find("<line ", pos)) != std::string::npos) {
        ++lines;
        pos += 6;
    }
    CHECK(circles == 4);
    CHECK(lines == 3);
}

TEST_CASE("bench emits a deterministic table without timings") {
    const std::string args = "bench --sizes 64,128 --variants y,uniform --seed 7 --reps 1 --no-time";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("uniform") != std::string::npos);
}
