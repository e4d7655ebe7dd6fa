#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kstab/cli.h"

using nlohmann::ordered_json;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
    ordered_json json() const { return ordered_json::parse(out); }
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("kstab");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun r;
    r.code = kstab::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("catalog lists twelve cases") {
    const CliRun r = run({"catalog"});
    REQUIRE(r.code == 0);
    const ordered_json j = r.json();
    CHECK(j["command"] == "catalog");
    CHECK(j["results"]["count"] == 12);
    CHECK(j["results"]["cases"].size() == 12);
}

TEST_CASE("catalog single case and Mori-Mukai filter") {
    const CliRun r = run({"catalog", "--id", "3-2-19"});
    REQUIRE(r.code == 0);
    const auto cases = r.json()["results"]["cases"];
    REQUIRE(cases.size() == 1);
    // same vertex set as the reference panel, stored counterclockwise
    const ordered_json expected = ordered_json::array(
        {ordered_json::array({"0", "-3"}), ordered_json::array({"4", "-1"}),
         ordered_json::array({"4", "1"}), ordered_json::array({"0", "3"})});
    CHECK(cases[0]["vertices"] == expected);
    CHECK(cases[0]["mori_mukai"] == "2-29");

    const CliRun mm = run({"catalog", "--mm", "1-16"});
    REQUIRE(mm.code == 0);
    const auto rows = mm.json()["results"]["cases"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["dm_id"] == "3-2-4");
    CHECK(rows[1]["dm_id"] == "3-2-18");

    CHECK(run({"catalog", "--id", "9-9-9"}).code == 2);
}

TEST_CASE("measures payload is exact") {
    const CliRun r = run({"measures", "3-2-17"});
    REQUIRE(r.code == 0);
    const ordered_json mu = r.json()["results"]["mu"];
    CHECK(mu["breakpoints"] == ordered_json::array({"-1", "0", "1"}));
    REQUIRE(mu["pieces"].size() == 2);
    CHECK(mu["pieces"][0] == ordered_json::array({"36"}));
    // (4/3)(3-2y)^2(3-4y) = 36 - 96y + 80y^2 - (64/3)y^3
    CHECK(mu["pieces"][1] == ordered_json::array({"36", "-96", "80", "-64/3"}));
}

TEST_CASE("logpair at t = 0 reduces to case 3-2-19") {
    const CliRun a = run({"measures", "--logpair", "0"});
    const CliRun b = run({"measures", "3-2-19"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.json()["results"]["mu"] == b.json()["results"]["mu"]);
    CHECK(a.json()["results"]["nu"] == b.json()["results"]["nu"]);
}

TEST_CASE("quadric measures emit the folded even density") {
    const CliRun r = run({"measures", "--quadric", "6"});
    REQUIRE(r.code == 0);
    const ordered_json folded = r.json()["results"]["mu_folded_even"];
    CHECK(folded["breakpoints"] == ordered_json::array({"0", "4"}));
    REQUIRE(folded["pieces"].size() == 1);
    CHECK(folded["pieces"][0] ==
          ordered_json::array({"2048/3", "-1024", "512", "-320/3", "8"}));
}

TEST_CASE("check exit codes follow the verdict") {
    CHECK(run({"check", "3-2-18", "--weight", "const:1"}).code == 0);
    CHECK(run({"check", "3-2-18", "--weight", "cosh:a=3"}).code == 4);
    // near the threshold value found by the solver
    CHECK(run({"check", "3-2-18", "--weight", "cosh:a=1.8103657684512697"}).code == 3);
    // nonzero futaki pairing for a non-symmetric case with constant weight
    CHECK(run({"check", "3-2-21", "--weight", "poly:1"}).code == 5);

    CHECK(run({"check", "9-8-7", "--weight", "const:1"}).code == 2);
    CHECK(run({"check", "3-2-18", "--weight", "wibble:2"}).code == 2);
    const CliRun nonpos = run({"check", "3-2-18", "--weight", "poly:0,1"});
    CHECK(nonpos.code == 2);
    CHECK(nonpos.err.find("positive") != std::string::npos);
}

TEST_CASE("check reports exact markers for rational results") {
    const CliRun r = run({"check", "3-2-18", "--weight", "const:1"});
    REQUIRE(r.code == 0);
    const ordered_json v = r.json()["results"]["verdict"];
    CHECK(v["classification"] == "polystable");
    CHECK(v["futaki"]["method"] == "exact_rational");
    CHECK(v["margin"]["value"] == 36.0);
    CHECK(v["margin"]["method"] == "exact_rational");
    CHECK(v.contains("tolerance"));
}

TEST_CASE("threshold command") {
    const CliRun r = run({"threshold", "3-2-18"});
    REQUIRE(r.code == 0);
    const double a0 = r.json()["results"]["a0"]["value"].get<double>();
    CHECK(std::abs(a0 - 1.81037) <= 5e-5);

    const CliRun r29 = run({"threshold", "3-2-19"});
    REQUIRE(r29.code == 0);
    CHECK(std::abs(r29.json()["results"]["a0"]["value"].get<double>() - 1.3176) <= 5e-4);

    const CliRun bad = run({"threshold", "3-2-18", "--bracket", "0.1,1"});
    CHECK(bad.code == 6);
    CHECK(bad.err.find("sign change") != std::string::npos);

    CHECK(run({"threshold", "3-2-3"}).code == 2);
}

TEST_CASE("certify command") {
    const CliRun c17 = run({"certify", "3-2-17", "--grid", "8"});
    REQUIRE(c17.code == 0);
    CHECK(c17.json()["results"]["found"] == true);
    CHECK(c17.json()["results"]["lambda"] == "2");

    const CliRun c23 = run({"certify", "3-2-23", "--grid", "8"});
    REQUIRE(c23.code == 0);
    CHECK(c23.json()["results"]["lambda"] == "0");

    const CliRun c19 = run({"certify", "3-2-19", "--grid", "40"});
    REQUIRE(c19.code == 0);
    CHECK(c19.json()["results"]["found"] == false);
    CHECK(c19.json()["results"].contains("message"));
}

TEST_CASE("logpair command") {
    const CliRun r = run({"logpair"});
    REQUIRE(r.code == 0);
    const ordered_json res = r.json()["results"];
    CHECK(std::abs(res["t0"]["value"].get<double>() - (std::sqrt(10.0) - 2.0) / 3.0) <= 1e-6);
    CHECK(res["verdicts_at_t0"]["const:1"]["classification"] == "strictly_semistable");
    CHECK(res["verdicts_at_t0"]["sech"]["classification"] == "polystable");
}

TEST_CASE("quadric command") {
    const CliRun r = run({"quadric", "5"});
    REQUIRE(r.code == 0);
    const ordered_json res = r.json()["results"];
    CHECK(res["indicator_interval"] == ordered_json::array({"3/2", "3"}));
    CHECK(res["verdict"]["classification"] == "unstable");
    CHECK(res["verdict"]["futaki"]["value"] == 0.0);

    CHECK(run({"quadric", "4"}).code == 2);
}

TEST_CASE("JSON output round-trips byte-identically") {
    const std::vector<std::vector<std::string>> commands = {
        {"catalog"},           {"measures", "3-2-18"},
        {"check", "3-2-18", "--weight", "cosh:a=2"},
        {"threshold", "3-2-19"},
        {"certify", "3-2-3", "--grid", "8"},
        {"quadric", "5"}};
    for (const auto& args : commands) {
        CAPTURE(args[0]);
        const CliRun r = run(args);
        REQUIRE(r.code >= 0);
        const ordered_json parsed = ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("plot CSV output") {
    const std::string path = "test_plot_tmp.csv";
    const CliRun r = run({"measures", "3-2-18", "--plot-csv", path, "--samples", "7"});
    REQUIRE(r.code == 0);
    std::ifstream csv(path);
    REQUIRE(csv.good());
    std::string line;
    std::getline(csv, line);
    CHECK(line == "y,density_mu,density_nu");
    int rows = 0;
    double mid_mu = -1.0;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        ++rows;
        if (rows == 4) {  // y = 0 sample
            std::istringstream ss(line);
            std::string y, mu, nu;
            std::getline(ss, y, ',');
            std::getline(ss, mu, ',');
            std::getline(ss, nu, ',');
            CHECK(std::stod(y) == doctest::Approx(0.0));
            mid_mu = std::stod(mu);
        }
    }
    CHECK(rows == 7);
    CHECK(mid_mu == doctest::Approx(36.0));
    std::remove(path.c_str());
}

TEST_CASE("custom polytope file matches the built-in case") {
    const std::string path = "test_polytope_tmp.json";
    {
        std::ofstream f(path);
        f << R"({"vertices": [["0","-3"],["6","0"],["0","3"]], "kappa": ["2","0"], "dh_exponent": 1})";
    }
    const CliRun file_run = run({"measures", "--polytope-file", path});
    const CliRun builtin = run({"measures", "3-2-18"});
    REQUIRE(file_run.code == 0);
    CHECK(file_run.json()["results"]["mu"] == builtin.json()["results"]["mu"]);
    CHECK(file_run.json()["results"]["nu"] == builtin.json()["results"]["nu"]);

    CHECK(run({"check", "--polytope-file", path, "--weight", "const:1"}).code == 0);
    std::remove(path.c_str());

    CHECK(run({"measures", "--polytope-file", "no_such_file.json"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"measures"}).code == 2);  // no selector
    CHECK(run({"measures", "3-2-18", "--logpair", "0"}).code == 2);  // two selectors
    CHECK(run({"--help"}).code == 0);
}
