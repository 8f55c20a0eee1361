#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "permcycle/cli.hpp"

using namespace permcycle;
using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json run_json(const std::vector<std::string>& args) {
    const CliResult r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("repeated invocations emit identical bytes") {
    const std::vector<std::vector<std::string>> cases = {
        {"prob", "no-cycles", "--lengths", "1,2"},
        {"simulate", "--n", "100", "--trials", "50", "--k", "1,4", "--seed", "3"},
        {"attack", "bard", "--width", "8", "--seed", "1"},
        {"fixdist", "--k", "6", "--cmax", "10"},
        {"costs", "--optimize"},
    };
    for (const auto& args : cases) {
        const CliResult a = run(args);
        const CliResult b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("no-fixed-point probability example") {
    const json j = run_json({"prob", "no-cycles", "--lengths", "1"});
    CHECK(j["config"]["subcommand"] == "prob no-cycles");
    CHECK(j["probability"]["value"].get<std::string>().rfind("0.36787944", 0) == 0);
    CHECK(j["probability"]["precisionBits"] == 256);
}

TEST_CASE("tau output and formats") {
    const json j = run_json({"tau", "1081080"});
    CHECK(j["tau"]["value"] == 256);
    CHECK(j["tau"]["exact"] == true);

    const CliResult csv = run({"tau", "12", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(contains(csv.out, "k,tau"));
    CHECK(contains(csv.out, "12,6"));

    const CliResult table = run({"tau", "12", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(contains(table.out, "tau"));
    CHECK(contains(table.out, "12"));
}

TEST_CASE("usage errors exit with code 2, computation errors with 1") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);                      // a subcommand is required
    CHECK(run({"costs"}).code == 2);               // needs --runs or --optimize
    CHECK(run({"costs", "--runs", "5", "--optimize"}).code == 2);
    CHECK(run({"keeloq", "encrypt", "--key", "ZZZ", "--block", "1"}).code == 2);
    CHECK(run({"tau"}).code == 2);                 // missing positional
    CHECK(run({"prob", "no-cycles", "--lengths", "1", "--bits", "8"}).code == 2);
    CHECK(run({"egf", "coeff", "--prohibit", "1", "--lengths", "2"}).code == 2);
    CHECK(run({"attack", "sat", "--width", "8"}).code == 2); // unknown mode

    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "permcycle"));

    const CliResult bad = run({"prob", "no-cycles", "--lengths", "0"});
    CHECK(bad.code == 1);
    CHECK(!bad.err.empty());
}

TEST_CASE("precision control by flag and environment") {
    const json wide = run_json({"prob", "no-cycles", "--lengths", "1"});
    const json narrow = run_json({"prob", "no-cycles", "--lengths", "1", "--bits", "64"});
    CHECK(narrow["probability"]["value"] == "0.3678794411714423216");
    CHECK(narrow["probability"]["precisionBits"] == 64);
    CHECK(wide["probability"]["value"].get<std::string>().size() >
          narrow["probability"]["value"].get<std::string>().size());

    setenv("PERMCYCLE_PRECISION_BITS", "64", 1);
    const json viaEnv = run_json({"prob", "no-cycles", "--lengths", "1"});
    CHECK(viaEnv["probability"]["value"] == "0.3678794411714423216");
    const json flagWins = run_json({"prob", "no-cycles", "--lengths", "1", "--bits", "128"});
    CHECK(flagWins["probability"]["precisionBits"] == 128);
    unsetenv("PERMCYCLE_PRECISION_BITS");
}

TEST_CASE("cipher subcommands round trip the known answer") {
    const json enc =
        run_json({"keeloq", "encrypt", "--key", "5CEC6701B79FD949", "--block", "0x12345678"});
    CHECK(enc["result"]["value"] == "0x9E26D0DD");
    const json dec =
        run_json({"keeloq", "decrypt", "--key", "5CEC6701B79FD949", "--block", "0x9E26D0DD"});
    CHECK(dec["result"]["value"] == "0x12345678");
}

TEST_CASE("simulation output is invariant under worker count and kernel choice") {
    const std::vector<std::string> base = {"simulate", "--n",    "120", "--trials",
                                           "60",       "--k",    "1,6", "--seed",
                                           "11",       "--workers"};
    const CliResult one = run([&] {
        auto v = base;
        v.push_back("1");
        return v;
    }());
    const CliResult three = run([&] {
        auto v = base;
        v.push_back("3");
        return v;
    }());
    CHECK(one.code == 0);
    CHECK(one.out == three.out);

    const json direct = run_json({"simulate", "--n", "120", "--trials", "60", "--k", "1,6",
                                  "--seed", "11"});
    const json reference = run_json({"simulate", "--n", "120", "--trials", "60", "--k",
                                     "1,6", "--seed", "11", "--reference"});
    CHECK(direct["rows"] == reference["rows"]);
    CHECK(direct["config"]["reference"] == false);
    CHECK(reference["config"]["reference"] == true);
}

TEST_CASE("attack reports and the timing gate") {
    const json bard = run_json({"attack", "bard", "--width", "8", "--seed", "1"});
    CHECK(bard["summary"]["trials"] == 1);
    REQUIRE(bard["reports"].size() == 1);
    CHECK(!bard["reports"][0].contains("wallTimeSeconds"));

    const json timed =
        run_json({"attack", "bard", "--width", "8", "--seed", "1", "--timings"});
    REQUIRE(timed["reports"].size() == 1);
    CHECK(timed["reports"][0].contains("wallTimeSeconds"));
    CHECK(timed["reports"][0]["wallTimeSeconds"].get<double>() >= 0.0);

    // every report field except the worker count is invariant
    const json w1 = run_json({"attack", "cbw", "--width", "8", "--seed", "9", "--workers", "1"});
    const json w2 = run_json({"attack", "cbw", "--width", "8", "--seed", "9", "--workers", "2"});
    CHECK(w1["summary"] == w2["summary"]);
    REQUIRE(w1["reports"].size() == w2["reports"].size());
    for (std::size_t i = 0; i < w1["reports"].size(); ++i) {
        json a = w1["reports"][i];
        json b = w2["reports"][i];
        CHECK(a["workers"] == 1);
        CHECK(b["workers"] == 2);
        a.erase("workers");
        b.erase("workers");
        CHECK(a == b);
    }
}

TEST_CASE("fixed-point distribution defaults to csv with a tail note") {
    const CliResult r = run({"fixdist", "--k", "2", "--cmax", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "# subcommand=fixdist"));
    CHECK(contains(r.out, "c,probability"));
    CHECK(contains(r.out, "# tail_bound="));
    CHECK(contains(r.out, "3,0.1487534400"));
}

TEST_CASE("series coefficients are exact rationals") {
    const CliResult r = run({"egf", "coeff", "--prohibit", "1", "--order", "8",
                             "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "2119/5760")); // derangements of S_8 over 8!

    const json conv = run_json({"egf", "convergence", "--prohibit", "4", "--order", "6"});
    REQUIRE(conv["rows"].size() == 7);
    CHECK(conv["rows"][6]["coefficient"] == "3/4");
    CHECK(conv.contains("limit"));
}

TEST_CASE("cost model subcommands") {
    const json opt = run_json({"costs", "--optimize"});
    CHECK(opt["cost"]["runs"] == 23);
    CHECK(opt["cost"]["noFiltering"] == false);

    const json five = run_json({"costs", "--runs", "5"});
    CHECK(five["cost"]["runs"] == 5);

    const CliResult table = run({"bard-table", "--half"});
    CHECK(table.code == 0);
    CHECK(contains(table.out, "eta,success"));
    CHECK(contains(table.out, "0.1,0.00467884"));
    CHECK(contains(table.out, "# half_success_eta=0.63073060487229917"));
}
