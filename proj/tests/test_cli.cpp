#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() /
                 ("hfold_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out_" + std::to_string(counter++));
    const std::string cmd =
        std::string(HFOLD_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.output = read_file(out);
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("sumset subcommand") {
    auto res = run_cli("sumset --set 1,2,4 --h 3 --r 2 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = Json::parse(res.output);
    CHECK(j["cardinality"] == 7);
    CHECK(j["min"] == 4);
    CHECK(j["max"] == 10);

    res = run_cli("sumset --set 1..5 --H 2,3 --r 2");
    REQUIRE(res.exit_code == 0);
    CHECK(contains(res.output, "{2..14}"));
    CHECK(contains(res.output, "cardinality: 13"));

    res = run_cli("sumset --set 1,2 --h 5 --r 2"); // unreachable fold count
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "cardinality: 0"));
}

TEST_CASE("sumset usage errors exit with 2") {
    CHECK(run_cli("sumset --set 1,2 --h 2 --H 1,2").exit_code == 2);
    CHECK(run_cli("sumset --set 1,2").exit_code == 2);
    CHECK(run_cli("sumset --set 1,x --h 2").exit_code == 2);
    CHECK(run_cli("sumset --h 2").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("bound subcommand") {
    auto res = run_cli("bound --k 5 --H 2,3 --r 2 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = Json::parse(res.output);
    CHECK(j["regime"] == "MainTheorem");
    CHECK(j["value"] == 13);
    CHECK(j["hypotheses_ok"] == true);
    long long sum = 0;
    for (const auto& term : j["terms"])
        sum += term["value"].get<long long>();
    CHECK(sum == 13);

    res = run_cli("bound --k 6 --H 3,4 --r 2 --zero --format json");
    REQUIRE(res.exit_code == 0);
    j = Json::parse(res.output);
    CHECK(j["regime"] == "ZeroMain");
    CHECK(j["value"] == 19);

    // no regime claims this window
    CHECK(run_cli("bound --k 5 --H 11,12 --r 2").exit_code == 2);
}

TEST_CASE("extremal subcommand") {
    auto res = run_cli("extremal --kind DirectTight --k 5 --r 2 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = Json::parse(res.output);
    CHECK(j["expected"] == 26);
    CHECK(j["computed"] == 26);
    CHECK(j["verified"] == true);

    res = run_cli("extremal --kind NonApGap --set 1,2,5 --r 2 --pair top "
                  "--format json");
    REQUIRE(res.exit_code == 0);
    j = Json::parse(res.output);
    CHECK(j["expected"] == 4);
    CHECK(j["verified"] == true);

    res = run_cli("extremal --kind NonApSmall --a1 1 --a2 3 --H 1,2 "
                  "--format json");
    REQUIRE(res.exit_code == 0);
    j = Json::parse(res.output);
    CHECK(j["expected"] == 5);
    CHECK(j["verified"] == true);

    CHECK(run_cli("extremal --kind Bogus --k 5").exit_code == 2);
    CHECK(run_cli("extremal --kind DirectTight --k 2 --r 2").exit_code == 2);
}

TEST_CASE("subseq subcommand") {
    auto res = run_cli("subseq --base 1..5 --r 2 --alpha 3 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = Json::parse(res.output);
    CHECK(j["cardinality"] == 27);
    CHECK(j["bound"] == 27);
    CHECK(j["bound_status"] == "tight");
    CHECK(j["interval_step"] == 1);

    res = run_cli("subseq --base 1,2,3,4,5 --subset --alpha 3 --format json");
    REQUIRE(res.exit_code == 0);
    j = Json::parse(res.output);
    CHECK(j["cardinality"] == 10);
    CHECK(j["bound_status"] == "tight");

    res = run_cli("subseq --base 1,2 --subset --alpha 1 --format json");
    REQUIRE(res.exit_code == 0); // below the bound's size gate
    j = Json::parse(res.output);
    CHECK(j["bound"].is_null());
    CHECK(j["bound_status"] == "n/a");

    CHECK(run_cli("subseq --base 1,2,3 --alpha 9").exit_code == 2);
}

TEST_CASE("check subcommand and exit codes") {
    auto res = run_cli("check --set 0..5 --H 3,4 --r 2");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "verdict: violated"));
    CHECK(contains(res.output, "formula: 19"));
    CHECK(contains(res.output, "enumerated: 18"));

    res = run_cli("check --set 1..6 --H 2,3 --r 2 --claim main --format json");
    REQUIRE(res.exit_code == 0);
    auto j = Json::parse(res.output);
    CHECK(j["verdict"] == "tight");
    CHECK(j["conclusion_violated"] == false);

    res = run_cli("check --set 1..5 --H 2,3 --r 2");
    CHECK(res.exit_code == 0); // tight, no violation
    CHECK(contains(res.output, "verdict: tight"));

    CHECK(run_cli("check --set 1..5 --H 2,3 --claim bogus").exit_code == 2);
}

TEST_CASE("verify with config file, overrides, and report output") {
    const fs::path cfg_path = scratch_dir() / "clean.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "# clean positive grid\n"
               "k = 3..4\n"
               "elements = 1..6\n"
               "r = 1..2\n"
               "t = 2\n"
               "h_window = main\n";
    }
    const fs::path rep_path = scratch_dir() / "clean.json";
    auto res = run_cli("verify --config " + cfg_path.string() + " --workers 3 --out " +
                       rep_path.string());
    REQUIRE(res.exit_code == 0);
    CHECK(contains(res.output, "violated 0"));
    const auto rep = Json::parse(read_file(rep_path));
    CHECK(rep["body"]["config"]["k"] == "3..4");
    CHECK(rep["run"]["workers"] == 3);
    CHECK(!rep["body"]["config"].contains("workers"));

    // flag overrides shrink the same grid
    const fs::path rep2_path = scratch_dir() / "clean_k3.json";
    res = run_cli("verify --config " + cfg_path.string() +
                  " --k 3 --out " + rep2_path.string());
    REQUIRE(res.exit_code == 0);
    const auto rep2 = Json::parse(read_file(rep2_path));
    CHECK(rep2["body"]["config"]["k"] == "3..3");
    CHECK(rep2["body"]["instances_checked"].get<long long>() <
          rep["body"]["instances_checked"].get<long long>());
}

TEST_CASE("verify campaign flags violations and writes CSV") {
    const fs::path rep_path = scratch_dir() / "zero.json";
    const fs::path csv_path = scratch_dir() / "zero.csv";
    auto res = run_cli(
        "verify --k 6 --elements 0..5 --r 2 --t 2 --h-window zero-main "
        "--require-zero --out " + rep_path.string() + " --csv " + csv_path.string());
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "counterexamples"));
    const auto rep = Json::parse(read_file(rep_path));
    REQUIRE(!rep["body"]["counterexamples"].empty());
    const auto& first = rep["body"]["counterexamples"][0];
    CHECK(first["formula"] == 19);
    CHECK(first["enumerated"] == 18);
    CHECK(first["verdict"] == "violated");
    const std::string csv = read_file(csv_path);
    CHECK(contains(csv, "r,k,A,H,claim,regime,formula,enumerated,verdict"));
    CHECK(contains(csv, "violated"));
}

TEST_CASE("verify determinism across worker counts") {
    const fs::path one = scratch_dir() / "w1.json";
    const fs::path four = scratch_dir() / "w4.json";
    // full-range window at k = 3 includes the degenerate straddle corner
    // (top fold count = kr with nothing between it and the threshold),
    // whose formula over-counts by one: deterministic violations.
    const std::string grid =
        "--k 3 --elements 1..6 --r 1..2 --t 2 --h-window full ";
    REQUIRE(run_cli("verify " + grid + "--workers 1 --out " + one.string())
                .exit_code == 1);
    REQUIRE(run_cli("verify " + grid + "--workers 4 --out " + four.string())
                .exit_code == 1);
    const auto j1 = Json::parse(read_file(one));
    const auto j4 = Json::parse(read_file(four));
    CHECK(j1["body"].dump() == j4["body"].dump());
    CHECK(j1["run"]["workers"] == 1);
    CHECK(j4["run"]["workers"] == 4);
}

TEST_CASE("worker default comes from the environment") {
    const fs::path rep_path = scratch_dir() / "env.json";
    const std::string cmd = "env HFOLD_WORKERS=2 " HFOLD_CLI_PATH
                            " verify --k 3 --elements 1..5 --r 2 --t 2"
                            " --h-window main --out " +
                            rep_path.string() + " >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(Json::parse(read_file(rep_path))["run"]["workers"] == 2);

    // an explicit --workers flag beats the environment
    const fs::path rep2_path = scratch_dir() / "env_override.json";
    const std::string cmd2 = "env HFOLD_WORKERS=2 " HFOLD_CLI_PATH
                             " verify --k 3 --elements 1..5 --r 2 --t 2"
                             " --h-window main --workers 1 --out " +
                             rep2_path.string() + " >/dev/null 2>&1";
    REQUIRE(std::system(cmd2.c_str()) == 0);
    CHECK(Json::parse(read_file(rep2_path))["run"]["workers"] == 1);
}

TEST_CASE("sampled campaigns require a seed on the command line") {
    const std::string grid = "--k 4 --elements 1..8 --r 2 --t 2 --h-window main ";
    auto res = run_cli("verify " + grid + "--sample 5");
    CHECK(res.exit_code == 2);
    CHECK(contains(res.output, "seed"));
    CHECK(run_cli("verify " + grid + "--sample 5 --seed 7").exit_code == 0);
}
