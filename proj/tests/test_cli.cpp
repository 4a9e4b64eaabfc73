#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ktmax/graph6.hpp"
#include "ktmax/report.hpp"

using ktmax::Graph;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int status = ktmax::cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decompose prints the four parameters") {
    CliRun r = run_cli({"decompose", "--m", "47", "--r", "8"});
    CHECK(r.status == 0);
    CHECK(r.out == "m=47 r=8 a=1 b=11 c=5 d=1\n");
}

TEST_CASE("bound reports closed forms and witnesses") {
    CliRun r = run_cli({"bound", "--m", "47", "--r", "8", "--t", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("g_3(47,8) = 94") != std::string::npos);
    CHECK(r.out.find("3M*_5 = 279") != std::string::npos);
    CHECK(r.out.find("329/3") != std::string::npos);
}

TEST_CASE("colex builds graphs and counts cliques") {
    CliRun r = run_cli({"colex", "--b", "5", "--t", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("k_3=2") != std::string::npos);

    r = run_cli({"colex", "--omega", "3", "--m", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("k_3=1") != std::string::npos);

    CHECK(run_cli({"colex"}).status == 2);
    CHECK(run_cli({"colex", "--b", "3", "--omega", "2"}).status == 2);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"decompose"}).status == 2);
    CHECK(run_cli({"verify", "not-a-suite"}).status == 2);
    CHECK(run_cli({"search", "--m", "3"}).status == 2);
}

TEST_CASE("clusters subcommand reads stdin") {
    std::string g6 = ktmax::to_graph6(Graph::complete(4));
    CliRun r = run_cli({"clusters", "--r", "3", "--input", "-"}, g6 + "\n");
    CHECK(r.status == 0);
    CHECK(r.out.find("1 cluster(s)") != std::string::npos);
    CHECK(r.out.find("t=4 s=0") != std::string::npos);

    r = run_cli({"clusters", "--r", "3", "--input", "-", "--format", "jsonl"}, g6 + "\n");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"kind\":\"cluster\"") != std::string::npos);
}

TEST_CASE("clusters flags malformed lines with status 1") {
    std::string g6 = ktmax::to_graph6(Graph::complete(4));
    CliRun r = run_cli({"clusters", "--r", "3"}, g6 + "\nbroken!!!line\n");
    CHECK(r.status == 1);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(r.out.find("1 cluster(s)") != std::string::npos);
}

TEST_CASE("fold folds the six-vertex example") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 5);
    CliRun r = run_cli({"fold", "--r", "3"}, ktmax::to_graph6(g) + "\n");
    CHECK(r.status == 0);
    CHECK(r.out.find("k_3: 2 -> 4") != std::string::npos);
}

TEST_CASE("search prints the comparison and witnesses") {
    CliRun r = run_cli({"search", "--m", "6", "--r", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("f_3(6,3) = 4") != std::string::npos);
    CHECK(r.out.find("match = yes") != std::string::npos);

    // Budgeted run exits 1 and leaves a checkpoint; resuming finishes.
    std::string path = "ktmax_test_checkpoint.jsonl";
    std::remove(path.c_str());
    CliRun limited = run_cli({"search", "--m", "8", "--r", "3", "--budget", "5", "--checkpoint", path});
    CHECK(limited.status == 1);
    CHECK(limited.err.find("checkpoint written") != std::string::npos);
    CliRun resumed = run_cli({"search", "--m", "8", "--r", "3", "--checkpoint", path});
    CHECK(resumed.status == 0);
    CliRun fresh = run_cli({"search", "--m", "8", "--r", "3"});
    CHECK(resumed.out == fresh.out);
    std::remove(path.c_str());
}

TEST_CASE("verify emits deterministic structured output and report aggregates it") {
    CliRun a = run_cli({"verify", "QR", "--count", "40", "--seed", "7", "--format", "jsonl"});
    CliRun b = run_cli({"verify", "QR", "--count", "40", "--seed", "7", "--format", "jsonl"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    std::istringstream parsed_in(a.out);
    auto parsed = ktmax::parse_jsonl(parsed_in);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].suite == "QR");
    CHECK(parsed[0].total_cases == 40);

    CliRun agg = run_cli({"report"}, a.out);
    CHECK(agg.status == 0);
    CHECK(agg.out.find("QR: 40 cases, 0 failures -> PASS") != std::string::npos);
}

TEST_CASE("verify r8-table prints the eight rows") {
    CliRun r = run_cli({"verify", "r8-table", "--m-max", "45"});
    CHECK(r.status == 0);
    CHECK(r.out.find("47   3  279   282") != std::string::npos);
    CHECK(r.out.find("55   5  325   330") != std::string::npos);

    // The full sweep compares the closed form against the exact oracle,
    // which disagrees at every multiple of 7; the suite reports that
    // honestly and exits 1.
    CliRun full = run_cli({"verify", "r8-table"});
    CHECK(full.status == 1);
    CHECK(full.out.find("agreement m=49") != std::string::npos);
}
