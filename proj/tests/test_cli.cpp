#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QTAFT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int expect_exit) {
    auto r = run_cli(args + " --json-only");
    CHECK(r.exit_code == expect_exit);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("check: pair-free tuple") {
    auto j = run_json("check 8 1 2 1 -2", 0);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "check");
    CHECK(j["params"]["N"] == 8);
    CHECK(j["params"]["b2"] == 6);  // normalised from -2
    CHECK(j["params"]["Nx"] == 8);
    CHECK(j["params"]["Ny"] == 2);
    CHECK(j["classifier"]["hasPair"] == false);
    CHECK(j["oracleHasPair"] == false);
    CHECK(j["agreement"] == true);
    CHECK(j["certificates"].empty());
    CHECK(j["structure"]["eXi"] == 5);
    CHECK(j["structure"]["eG"] == 1);
}

TEST_CASE("check: the N = 48 fixture") {
    auto j = run_json("check 48 34 4 26 4", 0);
    CHECK(j["classifier"]["hasPair"] == false);
    CHECK(j["classifier"]["tau"] == 2);
    CHECK(j["classifier"]["detMu"] == 12);
    CHECK(j["classifier"]["n"] == 4);
    CHECK(j["params"]["Nx"] == 12);
    CHECK(j["params"]["Ny"] == 3);
}

TEST_CASE("check: tuple with a modular pair") {
    auto j = run_json("check 6 1 1 1 5", 0);
    CHECK(j["classifier"]["hasPair"] == true);
    CHECK(j["oracleHasPair"] == true);
    REQUIRE(!j["certificates"].empty());
    CHECK(j["certificates"][0]["c"] == 0);
    CHECK(j["certificates"][0]["d"] == 1);
    CHECK(j["certificates"][0]["modular"] == true);
}

TEST_CASE("check: invalid tuple exits 2") {
    auto j = run_json("check 4 1 1 1 1", 2);
    CHECK(j["valid"] == false);
    CHECK(j.contains("error"));
}

TEST_CASE("scan: exhaustive to 8") {
    auto j = run_json("scan 8 --mode exhaustive", 0);
    CHECK(j["ok"] == true);
    CHECK(j["mode"] == "exhaustive");
    REQUIRE(j["rows"].size() == 7);
    CHECK(j["rows"][6]["N"] == 8);
    CHECK(j["rows"][6]["validTuples"] == 240);
    CHECK(j["rows"][6]["piiFree"] == 64);
    CHECK(j["rows"][6]["disagreements"] == 0);
    // Odd N rows are pair-complete.
    CHECK(j["rows"][1]["piiFree"] == 0);
    CHECK(j["rows"][3]["piiFree"] == 0);
    // N = 4 row: zero PII-free tuples.
    CHECK(j["rows"][2]["piiFree"] == 0);
}

TEST_CASE("scan: rejects maxN < 2") {
    auto j = run_json("scan 1", 2);
    CHECK(j["valid"] == false);
}

TEST_CASE("axioms: exhaustive pass") {
    auto j = run_json("axioms 2 1 1 1 1 --scope exhaustive", 0);
    CHECK(j["ok"] == true);
    bool saw_radford = false;
    for (const auto& row : j["axioms"]) {
        CHECK(row["ok"] == true);
        if (row["name"] == "radford_s4") saw_radford = true;
    }
    CHECK(saw_radford);
}

TEST_CASE("dual: prints the dual tuple") {
    auto j = run_json("dual 8 1 2 1 6", 0);
    CHECK(j["ok"] == true);
    CHECK(j["dualTuple"] == json({1, 6, 1, 2}));
    CHECK(j["bidualMatches"] == true);
    CHECK(j["failures"].empty());
}

TEST_CASE("double: small tuple passes") {
    auto j = run_json("double 2 1 1 1 1", 0);
    CHECK(j["ok"] == true);
    CHECK(j["hasPair"] == true);
    CHECK(j["certificateVerified"] == true);
    CHECK(j["isoMultiplicative"] == true);
}

TEST_CASE("double: large N gated behind --allow-large") {
    auto gated = run_json("double 8 1 2 1 6", 2);
    CHECK(gated["valid"] == false);
    // With the flag, the pair-free tuple is eliminated by the search.
    auto j = run_json("double 8 1 2 1 6 --allow-large", 0);
    CHECK(j["ok"] == true);
    CHECK(j["hasPair"] == false);
    CHECK(j["triangularSurvivors"] == 0);
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::string args :
         {std::string("check 6 1 1 1 5"), std::string("scan 6 --mode exhaustive"),
          std::string("axioms 2 1 1 1 1 --scope sampled --seed 7")}) {
        auto a = run_cli(args + " --json-only");
        auto b = run_cli(args + " --json-only");
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("missing subcommand or bad flags fail") {
    auto r = run_cli("");
    CHECK(r.exit_code != 0);
    auto bad = run_cli("scan 8 --mode bogus");
    CHECK(bad.exit_code != 0);
}
