#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the installed binary with the given arguments, capturing stdout.
// stderr is discarded; usage errors are asserted through the exit code.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string path = "/tmp/sethom_cli_" + std::to_string(++counter) + ".out";
    std::string cmd = std::string(SETHOM_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    std::ifstream file(path, std::ios::binary);
    std::ostringstream text;
    text << file.rdbuf();
    std::remove(path.c_str());
    return {WEXITSTATUS(status), text.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

}  // namespace

TEST_CASE("the realization tables match the stored fixtures") {
    RunResult three = run_cli("tables --k 3");
    CHECK(three.exit_code == 0);
    CHECK(three.output == read_file(std::string(SETHOM_FIXTURE_DIR) + "/table1.csv"));

    RunResult four = run_cli("tables --k 4");
    CHECK(four.exit_code == 0);
    CHECK(four.output == read_file(std::string(SETHOM_FIXTURE_DIR) + "/table2.csv"));

    RunResult as_json = run_cli("tables --k 3 --format json");
    CHECK(as_json.exit_code == 0);
    CHECK(json::parse(as_json.output).contains("rows"));
}

TEST_CASE("repeated runs with one seed emit identical bytes") {
    const std::string args = "edges --family N4 --n 11 --seed 42";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    json report = json::parse(first.output);
    CHECK(report["seed"] == 42);
}

TEST_CASE("the obstruction cover is solvable only at the smaller arity") {
    RunResult three = run_cli("solve --k 3");
    CHECK(three.exit_code == 0);
    CHECK(json::parse(three.output).size() == 2);

    RunResult four = run_cli("solve --k 4");
    CHECK(four.exit_code == 0);
    CHECK(json::parse(four.output).empty());
}

TEST_CASE("the landmark verification commands pass") {
    CHECK(run_cli("example52").exit_code == 0);
    CHECK(run_cli("fano").exit_code == 0);
    CHECK(run_cli("tournament").exit_code == 0);
}

TEST_CASE("reconstruction validates against the carrier") {
    RunResult r = run_cli("reconstruct --family M3 --n 10 --core 6 --seed 3");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.output);
    CHECK(report["status"] == "pass");
    CHECK(report["relations"]["order"]["validation"]["disagree"] == 0);
    CHECK(report["relations"]["order"]["validation"]["unknown"] == 0);
}

TEST_CASE("a failing invariant reports witnesses and exits nonzero") {
    RunResult r = run_cli("keylemma --family N4 --cores 6 --trials 60 --seed 7");
    CHECK(r.exit_code == 1);
    json report = json::parse(r.output);
    CHECK(report["status"] == "fail");
    REQUIRE(report.contains("failures"));
    CHECK(!report["failures"].empty());
    CHECK(report["failures"][0].contains("invariant"));
    CHECK(report["failures"][0].contains("witness"));
}

TEST_CASE("a perturbed relation is caught by the axiom suite") {
    RunResult r = run_cli("axioms --family M3 --n 9 --seed 4 --perturb");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.output);
    bool any_failed = false;
    for (const auto& axiom : report["axioms"])
        if (axiom["status"] == "fail") any_failed = true;
    CHECK(any_failed);

    RunResult clean = run_cli("axioms --family M3 --n 9 --seed 4");
    CHECK(clean.exit_code == 0);
    CHECK(json::parse(clean.output)["status"] == "pass");
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("tables --k 5").exit_code == 2);
    CHECK(run_cli("reconstruct --family M6").exit_code == 2);
    CHECK(run_cli("axioms --family N3").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
