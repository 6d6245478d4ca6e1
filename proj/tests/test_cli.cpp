#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drg/cli.hpp"
#include "json.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

struct CliRun {
    int rc = -1;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.rc = drg::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

ordered_json parse(const CliRun& r) { return ordered_json::parse(r.out); }

// every JSON verb starts with the same identification block, in order
void check_header(const ordered_json& j) {
    std::vector<std::string> keys;
    for (const auto& kv : j.items()) {
        keys.push_back(kv.key());
        if (keys.size() == 4) break;
    }
    REQUIRE(keys.size() == 4);
    CHECK(keys[0] == "array");
    CHECK(keys[1] == "n");
    CHECK(keys[2] == "k");
    CHECK(keys[3] == "D");
}

} // namespace

TEST_CASE("info reports the array data") {
    CliRun r = run({"info", "--family", "petersen"});
    REQUIRE(r.rc == 0);
    ordered_json j = parse(r);
    check_header(j);
    CHECK(j["array"] == "3,2;1,1");
    CHECK(j["n"] == 10);
    CHECK(j["k"] == 3);
    CHECK(j["D"] == 2);
    CHECK(j["b"] == ordered_json::array({3, 2}));
    CHECK(j["c"] == ordered_json::array({1, 1}));
    CHECK(j["a"] == ordered_json::array({0, 0, 2}));
    CHECK(j["shells"] == ordered_json::array({1, 3, 6}));
    CHECK(j["edges"] == 15);
    CHECK(j["bipartite"] == false);
    CHECK_FALSE(j.contains("warnings"));
}

TEST_CASE("info surfaces feasibility warnings") {
    CliRun r = run({"info", "--array", "4,1,2;1,1,2"});
    REQUIRE(r.rc == 0);
    ordered_json j = parse(r);
    REQUIRE(j.contains("warnings"));
    CHECK(j["warnings"].size() >= 1);
}

TEST_CASE("edge export prints one line per edge") {
    CliRun r = run({"info", "--family", "complete:4", "--edges"});
    REQUIRE(r.rc == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++count;
        int u = -1, v = -1;
        std::istringstream(line) >> u >> v;
        CHECK(u < v);
    }
    CHECK(count == 6);
}

TEST_CASE("potentials verb: json") {
    CliRun r = run({"potentials", "--family", "petersen"});
    REQUIRE(r.rc == 0);
    ordered_json j = parse(r);
    check_header(j);
    CHECK(j["phi"] == ordered_json::array({"9/1", "3/1"}));
    CHECK(j["Phi"] == ordered_json::array({"0/1", "9/1", "12/1"}));
    CHECK(j["resistance"] == ordered_json::array({"3/5", "4/5"}));
    REQUIRE(j.contains("resistance_decimal"));
    CHECK(j["resistance_decimal"][0].get<double>() == doctest::Approx(0.6));
    CHECK(j["resistance_decimal"][1].get<double>() == doctest::Approx(0.8));
}

TEST_CASE("potentials verb: csv") {
    CliRun r = run({"potentials", "--family", "petersen", "--csv"});
    REQUIRE(r.rc == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "i,phi,Phi,resistance");
    int rows = 0;
    std::string last;
    while (std::getline(lines, line))
        if (!line.empty()) { ++rows; last = line; }
    CHECK(rows == 3);
    // the final potential difference does not exist at i = D
    CHECK(last.substr(0, 3) == "2,,");
}

TEST_CASE("infeasible arrays exit with the validation code") {
    CliRun r = run({"potentials", "--array", "4,2;1,3"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("k_2") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("family constructions that exist in the literature but not here") {
    CliRun r = run({"info", "--family", "grassmann:4,2"});
    CHECK(r.rc == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run({"potentials"}).rc == 1);                       // no source
    CHECK(run({"no-such-verb", "--family", "petersen"}).rc == 1);
    CHECK(run({}).rc == 1);                                   // a verb is required
    CHECK(run({"genfun", "--family", "petersen", "--i", "1"}).rc == 1);  // --s missing
    CHECK(run({"--help"}).rc == 0);
}

TEST_CASE("measure validation failures exit with code 2") {
    CliRun r = run({"measure", "--family", "petersen", "--kind", "two", "--distances", "1,0,2"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("triangle") != std::string::npos);
}

TEST_CASE("resistance verb reports the spread") {
    CliRun r = run({"resistance", "--family", "petersen"});
    REQUIRE(r.rc == 0);
    ordered_json j = parse(r);
    CHECK(j["resistance"] == ordered_json::array({"3/5", "4/5"}));
    CHECK(j["spread"]["d_D_over_d_1"] == "4/3");
}

TEST_CASE("hitting and moments verbs") {
    ordered_json h = parse(run({"hitting", "--family", "petersen"}));
    CHECK(h["H"] == ordered_json::array({"9/1", "12/1"}));

    ordered_json m = parse(run({"moments", "--family", "petersen"}));
    CHECK(m["M2"] == ordered_json::array({"189/1", "258/1"}));
    CHECK(m["Var"] == ordered_json::array({"108/1", "114/1"}));
    REQUIRE(m.contains("C"));
    CHECK(m["C"]["value"] == "16/15");
    CHECK(m["C"]["form"] == "rational");
    REQUIRE(m.contains("brackets"));
    CHECK(m["brackets"].size() >= 4);
}

TEST_CASE("cover verb carries the exact harmonic-sum bracket") {
    ordered_json j = parse(run({"cover", "--family", "petersen"}));
    CHECK(j["harmonic_number_exact"] == "7129/2520");
    CHECK(j["matthews_lower_exact"] == "7129/280");
    CHECK(j["matthews_upper_exact"] == "7129/210");
    CHECK(j["matthews_lower"].get<double>() == doctest::Approx(25.460714));
    CHECK(j["matthews_upper"].get<double>() == doctest::Approx(33.947619));
}

TEST_CASE("mixing verb") {
    ordered_json j = parse(run({"mixing", "--family", "petersen"}));
    CHECK(j["F"] == "99/1");
    CHECK(j["tau0"] == "99/10");
    CHECK(j.contains("F_lower"));
    CHECK(j["F_bracket"] == "holds");
}

TEST_CASE("genfun verb evaluates and expands") {
    ordered_json j = parse(run({"genfun", "--family", "petersen", "--i", "1", "--s", "0.5",
                                "--series", "3"}));
    CHECK(j["value"].get<double>() == doctest::Approx(2.0 / 11.0));
    REQUIRE(j.contains("series"));
    CHECK(j["series"].size() == 3);
    CHECK(j["series"][0].get<double>() == doctest::Approx(0.0));
    CHECK(j["series"][1].get<double>() == doctest::Approx(1.0 / 3.0));
    CHECK(j["series"][2].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("spectrum verb") {
    ordered_json j = parse(run({"spectrum", "--family", "petersen"}));
    REQUIRE(j["eigenvalues"].size() == 3);
    CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(3.0));
    CHECK(j["eigenvalues"][1].get<double>() == doctest::Approx(1.0));
    CHECK(j["eigenvalues"][2].get<double>() == doctest::Approx(-2.0));
    CHECK(j["multiplicities"] == ordered_json::array({1, 5, 4}));
}

TEST_CASE("tvcurve csv starts with its header and runs to the mixing time") {
    CliRun r = run({"tvcurve", "--family", "petersen", "--csv"});
    REQUIRE(r.rc == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t,d");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);  // t = 0..4 at the default threshold

    // a bipartite walk without laziness never mixes
    CHECK(run({"tvcurve", "--family", "hamming:3,2", "--csv"}).rc == 2);
    CHECK(run({"tvcurve", "--family", "hamming:3,2", "--laziness", "1/4", "--csv"}).rc == 0);
}

TEST_CASE("greens verb") {
    ordered_json j = parse(run({"greens", "--family", "petersen", "--alpha", "2", "--r", "0"}));
    CHECK(j["value"] == "3/2");
    CHECK(j["shell_total"] == "3/2");
    CHECK(j["delta"] == "1/3");
}

TEST_CASE("measure verb kinds") {
    ordered_json two =
        parse(run({"measure", "--family", "petersen", "--kind", "two", "--distances", "1,1,2"}));
    CHECK(two["measure"] == "2/3");
    CHECK(two.contains("note"));

    ordered_json three = parse(run({"measure", "--family", "petersen", "--kind", "three",
                                    "--distances", "2,2,2,1,2,2"}));
    CHECK(three["measure"] == "1/2");

    ordered_json clique = parse(run({"measure", "--family", "petersen", "--kind", "clique",
                                     "--q", "2", "--d", "2", "--distances", "1,2"}));
    CHECK(clique["measure"] == "5/8");
}

TEST_CASE("harnack verb") {
    ordered_json j = parse(run({"harnack", "--family", "dodecahedron", "--kind", "two",
                                "--distances", "1,2,2", "--values", "1,0", "--gamma", "out"}));
    CHECK(j["holds"] == "holds");
    CHECK(j["printed_constant"] == true);
    CHECK(j["halved"] == true);
    CHECK(j["phi_bound"] == "4/19");
    CHECK(j["bound"]["exact"] == "1/3");
}

TEST_CASE("visits verb") {
    ordered_json j = parse(run({"visits", "--family", "petersen", "--distances", "1,2,1"}));
    CHECK(j["p_visit"] == "1/2");
    CHECK(j["mean_visits"] == "6/5");
    CHECK(j["var_visits"] == "78/25");
    CHECK(j["expected_distinct"] == "65/18");
    REQUIRE(j.contains("brackets"));
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::string> sim = {"simulate", "--family", "petersen", "--mode", "hitting",
                                    "--samples", "200", "--seed", "7"};
    CliRun a = run(sim);
    CliRun b = run(sim);
    REQUIRE(a.rc == 0);
    CHECK(a.out == b.out);

    CliRun p1 = run({"potentials", "--family", "dodecahedron"});
    CliRun p2 = run({"potentials", "--family", "dodecahedron"});
    CHECK(p1.out == p2.out);

    CliRun c = run({"simulate", "--family", "petersen", "--mode", "hitting", "--samples", "200",
                    "--seed", "8"});
    CHECK(a.out != c.out);
}

TEST_CASE("simulate hitting: explicit model where available, projected otherwise") {
    ordered_json j = parse(run({"simulate", "--family", "petersen", "--mode", "hitting",
                                "--samples", "200", "--seed", "42"}));
    CHECK(j["mode"] == "hitting");
    CHECK(j["model"] == "explicit");
    CHECK(j["distance"] == 2);
    CHECK(j["exact_mean"] == "12/1");
    CHECK(j["rng"] == "splitmix64-counter");
    REQUIRE(j.contains("mean"));
    REQUIRE(j.contains("stderr"));
    CHECK(std::fabs(j["z"].get<double>()) < 6.0);

    ordered_json p = parse(run({"simulate", "--array", "3,2,2,2,1,1,1;1,1,1,1,1,1,3", "--mode",
                                "hitting", "--samples", "100", "--seed", "1"}));
    CHECK(p["model"] == "projected");
    CHECK(p["exact_mean"] == "195/1");
}

TEST_CASE("simulate cover and visits") {
    ordered_json c = parse(run({"simulate", "--family", "petersen", "--mode", "cover",
                                "--samples", "150", "--seed", "3"}));
    CHECK(c["mode"] == "cover");
    REQUIRE(c.contains("mean"));
    CHECK(c.contains("matthews_lower"));
    CHECK(c.contains("matthews_upper"));

    ordered_json v = parse(run({"simulate", "--family", "petersen", "--mode", "visits",
                                "--distances", "1,2,1", "--samples", "150", "--seed", "5"}));
    CHECK(v["vertices"].size() == 3);
    CHECK(v["indicator_exact"] == "1/2");
    CHECK(v["count_exact"] == "6/5");
    CHECK(v["distinct_exact"] == "65/18");
    REQUIRE(v.contains("indicator"));
    REQUIRE(v["indicator"].contains("mean"));

    CliRun bad = run({"simulate", "--family", "petersen", "--mode", "visits", "--distances",
                      "1,1,1", "--samples", "150", "--seed", "5"});
    CHECK(bad.rc == 2);  // triangle-valid pattern, but the graph is triangle-free
    CHECK(bad.err.find("no vertex triple") != std::string::npos);
}

TEST_CASE("verify passes on a family with an explicit model") {
    CliRun r = run({"verify", "--family", "petersen", "--seed", "42"});
    REQUIRE(r.rc == 0);
    ordered_json j = parse(r);
    CHECK(j["pass"] == true);
    bool saw_oracle = false;
    for (const auto& row : j["checks"]) {
        CHECK(row["status"] != "fail");
        if (row["name"] == "oracle-hitting-moments") {
            saw_oracle = true;
            CHECK(row["status"] == "pass");
        }
    }
    CHECK(saw_oracle);
    CHECK(j["checks"].size() >= 15);
}

TEST_CASE("verify on a bare array skips the model-bound checks") {
    CliRun r = run({"verify", "--array", "3,2,2,2,1,1,1;1,1,1,1,1,1,3", "--seed", "42"});
    REQUIRE(r.rc == 0);
    ordered_json j = parse(r);
    CHECK(j["pass"] == true);
    int skips = 0;
    for (const auto& row : j["checks"])
        if (row["status"] == "skip") {
            ++skips;
            CHECK(row["detail"] == "no explicit model for this graph source");
        }
    CHECK(skips == 8);
}
