// In-process tests of the command-line front end: output shapes, exact JSON
// payloads for the frozen computations, determinism, and the exit-code
// contract (0 success, 1 computation error with a machine-readable error
// object, 2 usage error).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sp6/cli.hpp"

using nlohmann::json;
using sp6::run_cli;

namespace {

struct CliResult {
    int code = -1;
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

json parse_out(const CliResult& r) { return json::parse(r.out); }

/// Writes `text` to a fresh file under the system temp directory and removes
/// it when the guard goes out of scope.
class TempFile {
public:
    explicit TempFile(const std::string& text, const std::string& stem) {
        path_ = (std::filesystem::temp_directory_path() /
                 ("sp6_cli_test_" + stem + ".json"))
                    .string();
        std::ofstream f(path_);
        f << text;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const char* kAllOnesSatake =
    R"([{"prime": 2, "chi": [{"value": "1"}, {"value": "1"}, {"value": "1"}, {"value": "1"}]}])";

const char* kHodgeSample = R"({"h": [1, 0, 2, 3, 2, 0, 1], "h3plus": 2, "h3minus": 1})";

}  // namespace

TEST_CASE("projector --json emits the exact frozen payload, byte for byte") {
    const CliResult r = run({"projector", "--target", "2,2,-4", "--json"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "{\n"
          "  \"alpha\": \"1/3600\",\n"
          "  \"step1\": \"64\",\n"
          "  \"step2\": \"230400\"\n"
          "}\n");

    // The mirror target carries the same normalization data.
    const CliResult m = run({"projector", "--target", "4,-2,-2", "--json"});
    CHECK(m.code == 0);
    CHECK(m.out == r.out);
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"projector", "--target", "2,2,-4", "--json"},
          std::vector<std::string>{"ktypes", "--p", "3", "--q", "3", "--json"},
          std::vector<std::string>{"packets", "--lambda", "0,0,0", "--json"},
          std::vector<std::string>{"hwv-check", "--json"}}) {
        const CliResult a = run(args);
        const CliResult b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("table mode renders rows and reports elapsed time") {
    const CliResult r = run({"projector", "--target", "2,2,-4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("step1 (raising composite on x0):   64") != std::string::npos);
    CHECK(r.out.find("step2 (round-trip composite):      230400") != std::string::npos);
    CHECK(r.out.find("alpha (projection coefficient):    1/3600") != std::string::npos);
    CHECK(r.out.find("elapsed:") != std::string::npos);
    CHECK(r.out.rfind(" ms\n") == r.out.size() - 4);

    // JSON mode must not carry the timing line (it would break parsers).
    const CliResult j = run({"projector", "--target", "2,2,-4", "--json"});
    CHECK(j.out.find("elapsed") == std::string::npos);
}

TEST_CASE("packets --lambda 0,0,0 --json lists the eight members in order") {
    const CliResult r = run({"packets", "--lambda", "0,0,0", "--json"});
    REQUIRE(r.code == 0);
    const json arr = parse_out(r);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 8);

    const json& first = arr[0];
    CHECK(first["index"] == 1);
    CHECK(first["hc_param"] == json::array({3, 2, 1}));
    CHECK(first["min_ktype"] == json::array({4, 4, 4}));
    CHECK(first["hodge"] == json::array({6, 0}));
    CHECK(first["holomorphic"] == true);
    CHECK(first["antiholomorphic"] == false);

    const json& last = arr[7];
    CHECK(last["index"] == 8);
    CHECK(last["hc_param"] == json::array({-1, -2, -3}));
    CHECK(last["min_ktype"] == json::array({-4, -4, -4}));
    CHECK(last["hodge"] == json::array({0, 6}));
    CHECK(last["holomorphic"] == false);
    CHECK(last["antiholomorphic"] == true);

    // Hodge types exhaust (6,0) … (0,6) with (3,3) twice, and p + q = 6.
    int middle = 0;
    for (const json& d : arr) {
        const int p = d["hodge"][0].get<int>(), q = d["hodge"][1].get<int>();
        CHECK(p + q == 6);
        if (p == 3) ++middle;
    }
    CHECK(middle == 2);
}

TEST_CASE("ktypes --p 3 --q 3 --json carries both pinned targets with multiplicity one") {
    const CliResult r = run({"ktypes", "--p", "3", "--q", "3", "--json"});
    REQUIRE(r.code == 0);
    const json arr = parse_out(r);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 10);

    std::int64_t total = 0;
    bool saw_main = false, saw_mirror = false;
    for (const json& e : arr) {
        REQUIRE(e.contains("hw"));
        REQUIRE(e.contains("mult"));
        CHECK(e["mult"].get<int>() > 0);
        if (e["hw"] == json::array({2, 2, -4})) {
            saw_main = true;
            CHECK(e["mult"] == 1);
        }
        if (e["hw"] == json::array({4, -2, -2})) {
            saw_mirror = true;
            CHECK(e["mult"] == 1);
        }
        total += e["mult"].get<std::int64_t>();
    }
    CHECK(saw_main);
    CHECK(saw_mirror);
    CHECK(total == 16);  // sum of multiplicities across the ten constituents

    const CliResult table = run({"ktypes", "--p", "3", "--q", "3"});
    CHECK(table.code == 0);
    CHECK(table.out.find("total dimension 400") != std::string::npos);
}

TEST_CASE("hwv-check --json confirms both pinned vectors") {
    const CliResult r = run({"hwv-check", "--json"});
    REQUIRE(r.code == 0);
    const json arr = parse_out(r);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    for (const json& e : arr) {
        CHECK(e["weight_ok"] == true);
        CHECK(e["highest_weight"] == true);
        for (const char* name : {"e1-e2", "e2-e3", "e1-e3"})
            CHECK(e["annihilated"][name] == true);
        CHECK(e["vector"].is_array());
        CHECK(!e["vector"].empty());
    }
    CHECK(arr[0]["target"] == json::array({2, 2, -4}));
    CHECK(arr[1]["target"] == json::array({4, -2, -2}));

    // Restricting to one target yields a singleton array.
    const CliResult one = run({"hwv-check", "--target", "4,-2,-2", "--json"});
    REQUIRE(one.code == 0);
    const json single = parse_out(one);
    REQUIRE(single.size() == 1);
    CHECK(single[0]["target"] == json::array({4, -2, -2}));
}

TEST_CASE("lfactor reads Satake data from a file and reports exact denominators") {
    const TempFile satake(kAllOnesSatake, "allones");
    const CliResult r = run({"lfactor", "--satake", satake.path(), "--json"});
    REQUIRE(r.code == 0);
    const json payload = parse_out(r);
    CHECK(payload["mode"] == "exact");
    REQUIRE(payload["local"].size() == 1);
    const json& local = payload["local"][0];
    CHECK(local["prime"] == 2);
    CHECK(local["degree"] == 8);
    CHECK(local["denominator"] ==
          json::array({"1", "-8", "28", "-56", "70", "-56", "28", "-8", "1"}));
    CHECK(!payload.contains("evaluation"));
}

TEST_CASE("lfactor --s evaluates the partial L-value and cross-checks it") {
    const TempFile satake(kAllOnesSatake, "eval");
    const CliResult r =
        run({"lfactor", "--satake", satake.path(), "--s", "3.0", "--cutoff", "100", "--json"});
    REQUIRE(r.code == 0);
    const json payload = parse_out(r);
    CHECK(payload["mode"] == "float");  // an evaluation point forces numeric mode
    REQUIRE(payload.contains("evaluation"));
    const json& ev = payload["evaluation"];
    CHECK(ev["s"] == 3.0);
    CHECK(ev["cutoff"] == 100);
    CHECK(ev["agreement"].get<double>() <= 1e-10);

    // All Satake parameters 1 at p = 2: the factor is (1 - 2^{-3})^{-8}.
    const double expected = std::pow(8.0 / 7.0, 8);
    CHECK(std::abs(ev["product"]["re"].get<double>() - expected) < 1e-12 * expected);
    CHECK(std::abs(ev["product"]["im"].get<double>()) < 1e-15);
}

TEST_CASE("gamma reads Hodge data from a file and reports the pole order") {
    const TempFile hodge(kHodgeSample, "hodge");
    const CliResult r = run({"gamma", "--hodge", hodge.path(), "--at", "3", "--json"});
    REQUIRE(r.code == 0);
    const json payload = parse_out(r);
    CHECK(payload["at"] == 3);
    CHECK(payload["pole_order"] == 2);  // = h3plus for this datum

    REQUIRE(payload["factors"].size() == 4);
    auto factor = [](const char* kind, int shift, int exponent) {
        return json{{"kind", kind}, {"shift", shift}, {"exponent", exponent}};
    };
    CHECK(payload["factors"][0] == factor("C", 0, 1));
    CHECK(payload["factors"][1] == factor("C", 2, 2));
    CHECK(payload["factors"][2] == factor("R", 3, 2));
    CHECK(payload["factors"][3] == factor("R", 2, 1));

    const CliResult table = run({"gamma", "--hodge", hodge.path(), "--at", "3"});
    CHECK(table.code == 0);
    CHECK(table.out.find("pole order at s = 3: 2") != std::string::npos);
    CHECK(table.out.find("Gamma_C(s - 2)^2") != std::string::npos);
}

TEST_CASE("bm-verify --json reports homotopy levels and the decay fit") {
    const CliResult r = run({"bm-verify", "--grid", "4", "--levels", "2", "--json"});
    REQUIRE(r.code == 0);
    const json payload = parse_out(r);
    CHECK(payload["mode"] == "float");

    const json& homotopy = payload["homotopy"];
    CHECK(homotopy["grid_points"] == 4);
    REQUIRE(homotopy["levels"].size() == 2);
    const double r0 = homotopy["levels"][0]["residual"].get<double>();
    const double r1 = homotopy["levels"][1]["residual"].get<double>();
    CHECK(r1 < r0);  // refinement must contract
    REQUIRE(homotopy["ratios"].size() == 1);
    CHECK(homotopy["ratios"][0].get<double>() < 0.5);

    CHECK(payload["dbar_residual"].get<double>() < 5e-2);

    const json& decay = payload["decay"];
    CHECK(decay["N"] == 6);  // the default test form
    CHECK(decay["expected_exponent"] == 5);
    CHECK(std::abs(decay["fitted_exponent"].get<double>() - 5.0) < 0.1);
    CHECK(decay["consistency"].get<double>() < 1e-5);
}

TEST_CASE("computation errors exit 1 with a machine-readable error object") {
    SUBCASE("non-dominant packet parameter") {
        const CliResult r = run({"packets", "--lambda", "1,1,-1"});
        CHECK(r.code == 1);
        const json e = parse_out(r);  // error object appears even without --json
        CHECK(e["error"]["type"] == "invalid_argument");
        CHECK(e["error"]["message"].get<std::string>().find("(1,1,-1)") != std::string::npos);
    }
    SUBCASE("exterior power out of range") {
        const CliResult r = run({"ktypes", "--p", "7", "--q", "0", "--json"});
        CHECK(r.code == 1);
        CHECK(parse_out(r)["error"]["type"] == "invalid_argument");
    }
    SUBCASE("unsupported projector target") {
        const CliResult r = run({"projector", "--target", "1,1,1", "--json"});
        CHECK(r.code == 1);
        const json e = parse_out(r);
        CHECK(e["error"].contains("type"));
        CHECK(e["error"].contains("message"));
    }
    SUBCASE("malformed weight string") {
        const CliResult r = run({"packets", "--lambda", "1,2"});
        CHECK(r.code == 1);
        CHECK(parse_out(r)["error"]["type"] == "invalid_argument");
    }
    SUBCASE("malformed JSON input file") {
        const TempFile bad("{not json", "badjson");
        const CliResult r = run({"lfactor", "--satake", bad.path(), "--json"});
        CHECK(r.code == 1);
        CHECK(parse_out(r)["error"]["type"] == "invalid_argument");
    }
    SUBCASE("structurally wrong input file") {
        const TempFile wrong(R"({"prime": 2})", "wrongshape");
        const CliResult r = run({"gamma", "--hodge", wrong.path(), "--at", "0"});
        CHECK(r.code == 1);
        CHECK(parse_out(r)["error"]["type"] == "invalid_argument");
    }
}

TEST_CASE("usage errors exit 2 and leave stdout free of payloads") {
    SUBCASE("no subcommand") {
        const CliResult r = run({});
        CHECK(r.code == 2);
        CHECK(!r.err.empty());
    }
    SUBCASE("unknown subcommand") {
        const CliResult r = run({"frobnicate"});
        CHECK(r.code == 2);
        CHECK(!r.err.empty());
    }
    SUBCASE("missing required option") {
        const CliResult r = run({"projector"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--target") != std::string::npos);
    }
    SUBCASE("nonexistent input file is a usage error, not a computation error") {
        const CliResult r = run({"lfactor", "--satake", "/nonexistent/satake.json"});
        CHECK(r.code == 2);
        CHECK(!r.err.empty());
    }
}

TEST_CASE("--help exits 0 and documents the subcommands") {
    const CliResult r = run({"--help"});
    CHECK(r.code == 0);
    for (const char* name :
         {"packets", "ktypes", "hwv-check", "projector", "lfactor", "gamma", "bm-verify"})
        CHECK(r.out.find(name) != std::string::npos);
}
