#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "nument/entropy.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr, merged
};

RunResult run_cli(const std::string &args) {
    const char *bin = std::getenv("NUMENT_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "NUMENT_CLI_BIN must point at the CLI binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

} // namespace

TEST_SUITE("cli") {

    TEST_CASE("entropy command") {
        const RunResult r = run_cli("entropy 30");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.output);
        CHECK(j == json{{"n", 30}, {"omega", 3}, {"big_omega", 3}, {"entropy", std::log(3.0)}});

        // the CLI is a thin adapter: values match the library bit-for-bit
        const RunResult r12 = run_cli("entropy 12");
        REQUIRE(r12.exit_code == 0);
        const json j12 = json::parse(r12.output);
        CHECK(j12["entropy"].get<double>() == nument::integer_entropy(12));
        CHECK(j12["omega"] == 2);
        CHECK(j12["big_omega"] == 3);
    }

    TEST_CASE("divergence command and error reporting") {
        const RunResult ok = run_cli("divergence 12 18");
        REQUIRE(ok.exit_code == 0);
        CHECK(json::parse(ok.output)["divergence"].get<double>() == nument::integer_divergence(12, 18));

        const RunResult mismatch = run_cli("divergence 12 30");
        CHECK(mismatch.exit_code == 1);
        CHECK(mismatch.output.find("omega-mismatch") != std::string::npos);

        const RunResult unit = run_cli("divergence 1 2");
        CHECK(unit.exit_code == 1);
        CHECK(unit.output.find("unit-input") != std::string::npos);
    }

    TEST_CASE("ideal commands") {
        const RunResult r = run_cli("ideal entropy --exponents 1,4");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.output);
        CHECK(j["ideal"] == "P1^1,P2^4");
        CHECK(j["omega"] == 2);
        CHECK(j["big_omega"] == 5);
        CHECK(j["entropy"].get<double>() == doctest::Approx(0.50040242353818787).epsilon(1e-14));

        const RunResult d = run_cli("ideal divergence --left 1,4 --right 3,2");
        REQUIRE(d.exit_code == 0);
        CHECK(json::parse(d.output)["divergence"].get<double>() ==
              doctest::Approx(0.091516221849435669).epsilon(1e-14));
    }

    TEST_CASE("cyclotomic commands") {
        const RunResult r = run_cli("cyclo split --p 2 --n 5");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.output) == json{{"e", 1}, {"f", 4}, {"g", 1}, {"phi", 4}});

        const RunResult gen = run_cli("cyclo ideal --conductor 5 --rational 2:1 --lambda 4");
        REQUIRE(gen.exit_code == 0);
        const json jg = json::parse(gen.output);
        CHECK(jg["ideal"] == "2^1,lambda^4");
        CHECK(jg["big_omega"] == 5);

        const RunResult bad = run_cli("cyclo ideal --conductor 4 --lambda 1");
        CHECK(bad.exit_code == 1);
        CHECK(bad.output.find("conductor-not-prime") != std::string::npos);
    }

    TEST_CASE("cubic commands") {
        const RunResult r = run_cli("cubic classify --a 10 --b 25 --p 5");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.output);
        CHECK(j["delta"] == "-12875");
        CHECK(j["condition"] == "valuation");
        CHECK(j["rule_verdict"] == true);
        CHECK(j["oracle"]["abstained"] == true);
        CHECK(j["source"] == "rule");
        CHECK(j["verdict"] == true);

        const RunResult o = run_cli("cubic classify --a 1 --b 1 --p 5 --oracle-only");
        REQUIRE(o.exit_code == 0);
        const json jo = json::parse(o.output);
        CHECK(jo["condition"] == "odd-free-part");
        CHECK(jo["rule_verdict"] == true);
        CHECK(jo["oracle"]["abstained"] == false);
        CHECK(jo["oracle"]["pattern"] == json::array({{1, 1}, {1, 2}}));
        CHECK(jo["source"] == "oracle");
        CHECK(jo["verdict"] == false); // rule and oracle disagree here

        const RunResult both = run_cli("cubic classify --a 1 --b 1 --p 5 --oracle-only --literal-rule");
        CHECK(both.exit_code == 1); // mutually exclusive flags

        const RunResult cc = run_cli("cubic cross-check --a-range 1:2 --b-range 1:2 --p-max 7");
        REQUIRE(cc.exit_code == 0);
        const json jcc = json::parse(cc.output);
        CHECK(jcc["summary"]["fields"] == 3); // (2, 1) is reducible
        CHECK(jcc["records"].size() == jcc["summary"]["compared"].get<std::size_t>());
    }

    TEST_CASE("scan and grid commands") {
        const RunResult s = run_cli("scan system --bound 12 --allow-negative");
        REQUIRE(s.exit_code == 0);
        CHECK(json::parse(s.output) == json::parse("[[1,2,4,-1],[2,4,8,-2],[3,6,12,-3]]"));

        const RunResult t = run_cli("scan thresholds --s-max 10");
        REQUIRE(t.exit_code == 0);
        CHECK(json::parse(t.output) ==
              json::parse("[[1,3],[2,6],[3,9],[4,11],[5,14],[6,16],[7,19],[8,21],[9,24],[10,27]]"));

        const RunResult g = run_cli("grid --s-max 2 --r-max 2 --out cli_grid_test.csv");
        REQUIRE(g.exit_code == 0);
        CHECK(json::parse(g.output) == json{{"rows", 9}, {"file", "cli_grid_test.csv"}});
        std::ifstream file("cli_grid_test.csv");
        REQUIRE(file.good());
        std::string line;
        std::size_t lines = 0;
        while (std::getline(file, line)) ++lines;
        CHECK(lines == 10); // header + 9 rows
        file.close();
        std::remove("cli_grid_test.csv");

        const RunResult gs = run_cli("grid --s-max 1 --r-max 1");
        REQUIRE(gs.exit_code == 0);
        CHECK(gs.output.rfind("s,r,f\n", 0) == 0);
    }

    TEST_CASE("usage errors") {
        CHECK(run_cli("--help").exit_code == 0);
        CHECK(run_cli("").exit_code == 1);             // a subcommand is required
        CHECK(run_cli("entropy").exit_code == 1);      // missing argument
        CHECK(run_cli("--no-such-flag").exit_code == 1);
        CHECK(run_cli("scan system --bound 0").exit_code == 1);
    }
}
