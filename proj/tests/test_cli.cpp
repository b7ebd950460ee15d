#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "sigma_lab/cli.hpp"
#include "sigma_lab/graph.hpp"
#include "sigma_lab/graph6.hpp"

using namespace sigmalab;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run(const std::vector<std::string>& args) {
    std::stringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    const int code = run_cli(args);
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

}  // namespace

TEST_CASE("sigma subcommand") {
    const auto k2 = run({"sigma", "--graph6", "A_"});
    CHECK(k2.exit_code == 0);
    CHECK(k2.out == "1\n");

    const auto c5 = run({"sigma", "--family", "cycle", "--n", "5"});
    CHECK(c5.exit_code == 0);
    CHECK(c5.out == "2\n");

    const auto floated = run({"sigma", "--graph6", "A_", "--float"});
    CHECK(floated.exit_code == 0);
    CHECK(floated.out == "1\n");
}

TEST_CASE("spectrum subcommand") {
    const auto star5 = run({"spectrum", "--family", "star", "--n", "5"});
    CHECK(star5.exit_code == 0);
    CHECK(star5.out == "5, 1, 1, 1, 0\n");
}

TEST_CASE("compose subcommand") {
    const auto joined = run({"compose", "--op", "join", "--graph6", "@", "--graph6", "@"});
    CHECK(joined.exit_code == 0);
    CHECK(joined.out == "2, 0\n");

    const auto merged = run({"compose", "--op", "union", "--graph6", "A_", "--graph6", "@"});
    CHECK(merged.exit_code == 0);
    CHECK(merged.out == "2, 0, 0\n");

    CHECK(run({"compose", "--op", "join", "--graph6", "@"}).exit_code == 1);
}

TEST_CASE("classify subcommand") {
    const auto c5 = run({"classify", "--graph6", graph6_encode(cycle(5))});
    CHECK(c5.exit_code == 0);
    CHECK(c5.out.find("sigma: 2") != std::string::npos);
    CHECK(c5.out.find("pseudo_split: yes") != std::string::npos);
    CHECK(c5.out.find("split: no") != std::string::npos);
    CHECK(c5.out.find("conjecture_form: none") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
    const auto four = run({"enumerate", "--n", "4"});
    CHECK(four.exit_code == 0);
    CHECK(std::count(four.out.begin(), four.out.end(), '\n') == 11);

    const auto cumulative = run({"enumerate", "--n", "4", "--cumulative"});
    CHECK(std::count(cumulative.out.begin(), cumulative.out.end(), '\n') == 1 + 2 + 4 + 11);

    CHECK(run({"enumerate", "--n", "9"}).exit_code == 1);
}

TEST_CASE("verify subcommand writes a report and exits by verdict") {
    const char* out_path = "cli_report_tmp.json";
    const auto ok = run({"verify", "--enumerate", "5", "--laws", "all", "--out", out_path});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("law,holds,fails,na") != std::string::npos);
    CHECK(ok.out.find("graphs: 52") != std::string::npos);

    std::ifstream in(out_path);
    REQUIRE(in.good());
    nlohmann::json report;
    in >> report;
    CHECK(report["corpus"]["max_n"] == 5);
    CHECK(report["laws"].size() == 11);
    for (const auto& law : report["laws"]) CHECK(law["fails"] == 0);
    std::remove(out_path);

    const auto single_law = run({"verify", "--graph6", "A_", "--laws", "grone"});
    CHECK(single_law.exit_code == 0);

    CHECK(run({"verify", "--file", "missing.g6"}).exit_code == 1);
    CHECK(run({"verify", "--enumerate", "5", "--laws", "bogus"}).exit_code == 1);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({"frobnicate"}).exit_code == 1);
    CHECK(run({"sigma", "--no-such-flag"}).exit_code == 1);
    CHECK(run({"sigma"}).exit_code == 1);  // no input graph
    CHECK(run({"sigma", "--graph6", "ZZZZ"}).exit_code == 1);
    CHECK(run({}).exit_code == 1);
    CHECK(run({"--help"}).exit_code == 0);
}
