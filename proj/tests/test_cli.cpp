#include "stci/cli.hpp"

#include "stci/json_io.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace stci;

namespace {

struct CliRun {
    int code = 0;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    CliRun r;
    r.code = run_cli(args, o, e);
    r.out = o.str();
    r.err = e.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << body;
    return p.string();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Minimal quote-aware CSV field counter.
size_t csv_fields(const std::string& line) {
    size_t n = 1;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        else if (line[i] == ',' && !quoted) ++n;
    }
    return n;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

const char* kP1 = R"({"l":5,"m":7,"n":13,"tails":{"y":[[11,"1"]],"z":[]}})";
const char* kP2 = R"({"l":5,"m":17,"n":28,"tails":{"y":[[18,"1"]]}})";

} // namespace

TEST_CASE("version, help, and argument errors") {
    CliRun r = run({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.1.0\n");

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "semigroup"));
    CHECK(contains(r.out, "deform"));

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"semigroup", "5", "7"}).code == 2);
    CHECK(run({"semigroup", "5", "7", "0"}).code == 2);
    CHECK(run({"semigroup", "2", "4", "6"}).code == 2); // gcd 2
}

TEST_CASE("semigroup command output") {
    CliRun r = run({"semigroup", "5", "7", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "semigroup <5,7,13>\n"
                   "gaps (9): 1 2 3 4 6 8 9 11 16\n"
                   "frobenius: 16\n"
                   "conductor: 17\n"
                   "apery mod 5: 0 21 7 13 14\n");
    CHECK(r.err.empty());

    r = run({"semigroup", "5", "7", "13", "--json"});
    CHECK(r.code == 0);
    OJson doc = OJson::parse(r.out);
    CHECK(doc["tool_version"] == "0.1.0");
    CHECK(doc["command"] == "semigroup");
    CHECK(doc["inputs"]["l"] == 5);
    CHECK(doc["result"]["frobenius"] == 16);
    CHECK(doc["result"]["conductor"] == 17);
    CHECK(doc["result"]["apery"]["mod"] == 5);
    CHECK(doc["result"]["apery"]["least"] == OJson::array({0, 21, 7, 13, 14}));

    // byte-for-byte stable across runs
    CHECK(run({"semigroup", "5", "7", "13", "--json"}).out == r.out);
}

TEST_CASE("quiet mode suppresses stdout but keeps the exit code") {
    CliRun r = run({"semigroup", "5", "7", "13", "--quiet"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    std::string p2 = write_temp("stci_cli_quiet_p2.json", kP2);
    r = run({"deform", p2, "--quiet"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
}

TEST_CASE("relation classification command") {
    CliRun r = run({"herzog", "5", "7", "13", "--json"});
    REQUIRE(r.code == 0);
    OJson h = OJson::parse(r.out)["result"]["herzog"];
    CHECK(h["kind"] == "H1");
    CHECK(h["multipliers"]["a"] == 4);
    CHECK(h["multipliers"]["b"] == 4);
    CHECK(h["multipliers"]["c"] == 2);
    CHECK(h["sextuple"] ==
          OJson({{"a1", 1}, {"a2", 3}, {"b1", 1}, {"b2", 3}, {"c1", 1}, {"c2", 1}}));
    CHECK(h["relations"] == OJson::parse("[[4,-1,-1],[-3,4,-1],[-1,-3,2]]"));
    OJson e = OJson::parse(r.out)["result"]["equations"];
    CHECK(e["equations"] ==
          OJson::array({"x^4 - y*z", "y^4 - x^3*z", "-x*y^3 + z^2"}));
    CHECK(e["degrees"] == OJson::array({20, 28, 26}));
    CHECK(e["matrix"] ==
          OJson::parse(R"([["z","x","y"],["y^3","z","x^3"]])"));

    r = run({"herzog", "4", "5", "10", "--json"});
    REQUIRE(r.code == 0);
    h = OJson::parse(r.out)["result"]["herzog"];
    CHECK(h["kind"] == "H2");
    CHECK(h["subcase"] == "pure_yz");
    CHECK(h["perm"] == OJson::array({1, 2, 0}));
    CHECK(h["a"] == 2);
    CHECK(h["b"] == 1);
    CHECK(h["c"] == 5);
    CHECK(h["a1"] == 0);
    CHECK(h["b2"] == 2);
    CHECK(h["relations"] == OJson::parse("[[0,2,-1],[5,0,-2]]"));
    e = OJson::parse(r.out)["result"]["equations"];
    CHECK(e["equations"] == OJson::array({"y^2 - z", "x^5 - z^2"}));
    CHECK(e["matrix"].is_null());
}

TEST_CASE("surface identity command") {
    CliRun r = run({"stci", "5", "7", "13", "--json"});
    REQUIRE(r.code == 0);
    OJson res = OJson::parse(r.out)["result"];
    CHECK(res["bresinsky"]["c"] == 2);
    CHECK(res["bresinsky"]["k"] == 1);
    CHECK(res["bresinsky"]["q"] == "y^2");
    CHECK(res["bresinsky"]["g"] == "x^7 + y^5 - 2*x^3*y*z");
    CHECK(res["bresinsky"]["residue_sign"] == 1);
    CHECK(res["bresinsky"]["identity_verified"] == true);
    CHECK(res["xz_binomial"] == OJson({{"nt", 13}, {"lt", 5}, {"g", 1}}));
    CHECK(res["moh"] == false);

    // two-relation input: no surface identity, but not an error
    r = run({"stci", "4", "6", "9", "--json"});
    CHECK(r.code == 0);
    res = OJson::parse(r.out)["result"];
    CHECK(res["herzog"]["kind"] == "H2");
    CHECK(res["bresinsky"].is_null());

    r = run({"stci", "3", "4", "5", "--json"});
    CHECK(r.code == 0);
    CHECK(OJson::parse(r.out)["result"]["moh"] == true);
}

TEST_CASE("inverse construction commands") {
    CliRun r = run({"inverse", "gs1", "1", "3", "1", "3", "1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "candidate generators: l'=5 m'=7 n'=13  gcd=1\n"
                   "is image: yes (the triple realizes the sextuple)\n");

    r = run({"inverse", "gs1", "2", "2", "2", "2", "2", "2", "--json"});
    CHECK(r.code == 1);
    OJson res = OJson::parse(r.out)["result"];
    CHECK(res["is_image"] == false);
    CHECK(res["e"] == 12);
    CHECK(res["round_trip"].is_null());

    r = run({"inverse", "gs2", "3", "2", "4", "1", "4"});
    CHECK(r.code == 1);
    CHECK(r.out ==
          "candidate generators: l'=4 m'=6 n'=7  d'=2\n"
          "is image: no (input relations are not the minimal ones of the triple)\n");

    r = run({"inverse", "gs2", "4", "3", "2", "2", "1", "--json"});
    CHECK(r.code == 1);
    res = OJson::parse(r.out)["result"];
    CHECK(res["is_image"] == false);
    CHECK(res["reason"] == "constructed triple has three minimal relations");

    r = run({"inverse", "gs2", "3", "2", "2", "1", "1", "--json"});
    CHECK(r.code == 0);
    res = OJson::parse(r.out)["result"];
    CHECK(res["is_image"] == true);
    CHECK(res["l"] == 4);
    CHECK(res["m"] == 6);
    CHECK(res["n"] == 5);
    CHECK(res["dprime"] == 2);

    CHECK(run({"inverse"}).code == 2);
    CHECK(run({"inverse", "gs1", "1", "2", "3"}).code == 2); // arity
}

TEST_CASE("deform command certifies and reports") {
    std::string p1 = write_temp("stci_cli_p1.json", kP1);
    CliRun r = run({"deform", p1});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "parametrization over <5,7,13>, tails: y: t^11"));
    CHECK(contains(r.out, "value semigroup: equals_conductor (conductor 17)"));
    CHECK(contains(r.out, "lift: verified, margins 4 4 4"));
    CHECK(contains(r.out, "stci bound: 24 >= 22  holds"));
    CHECK(contains(r.out, "verdict: Certified"));
    CHECK(contains(r.out,
                   "one-form valuation: 16 (gap: the germ is not the monomial one)"));

    r = run({"deform", p1, "--json"});
    CHECK(r.code == 0);
    OJson res = OJson::parse(r.out)["result"];
    CHECK(res["trunc"] == 90);
    CHECK(res["certificate"]["verdict"] == "certified");
    CHECK(res["certificate"]["value_check"]["verdict"] == "equals_conductor");
    CHECK(res["certificate"]["one_form_valuation"] == 16);
    CHECK(res["certificate"]["nonmonomial"] == true);

    std::string p2 = write_temp("stci_cli_p2.json", kP2);
    r = run({"deform", p2, "--trunc", "60", "--json"});
    CHECK(r.code == 1);
    res = OJson::parse(r.out)["result"];
    CHECK(res["trunc"] == 60);
    const OJson& cert = res["certificate"];
    CHECK(cert["verdict"] == "not_certified");
    CHECK(cert["note"] == "criterion silent: this is not a disproof");
    CHECK(cert["semigroup_constancy"] ==
          OJson({{"lhs", 46}, {"rhs", 47}, {"holds", false}}));
    CHECK(cert["value_check"]["verdict"] == "exceeds_conductor");
    CHECK(cert["value_check"]["extra"] == OJson::array({46}));
    CHECK(cert["value_check"]["witnesses"][0]["reduced"] ==
          OJson::array({9, 0, 0}));
    CHECK(cert["value_check"]["witnesses"][0]["table"] ==
          OJson::array({0, 1, 1}));
    CHECK(cert["lift"]["any_jump"] == true);
    CHECK(cert["lift"]["equations"][0]["jump"] == 46);
    CHECK(cert["lift"]["equations"][0]["ord_margin"] == "inf");

    r = run({"deform", p1, "--trunc", "17"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "truncation order 17 is below the sound minimum 18"));
}

TEST_CASE("deform input parsing and the truncation environment knob") {
    CHECK(run({"deform", "/nonexistent/stci_missing.json"}).code == 2);

    std::string bad =
        write_temp("stci_cli_bad.json", R"({"l":5,"m":7,"n":13,"tail":{}})");
    CliRun r = run({"deform", bad});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "parse error"));

    std::string badcoef = write_temp(
        "stci_cli_badcoef.json", R"({"l":5,"m":7,"n":13,"tails":{"y":[[11,"x"]]}})");
    CHECK(run({"deform", badcoef}).code == 2);

    std::string p1 = write_temp("stci_cli_p1b.json", kP1);
    setenv("STCI_TRUNC", "40", 1);
    r = run({"deform", p1, "--json"});
    CHECK(r.code == 0);
    CHECK(OJson::parse(r.out)["result"]["trunc"] == 40);

    // an explicit flag beats the environment
    r = run({"deform", p1, "--trunc", "50", "--json"});
    CHECK(r.code == 0);
    CHECK(OJson::parse(r.out)["result"]["trunc"] == 50);

    setenv("STCI_TRUNC", "abc", 1);
    CHECK(run({"deform", p1}).code == 2);
    setenv("STCI_TRUNC", "-3", 1);
    CHECK(run({"deform", p1}).code == 2);
    unsetenv("STCI_TRUNC");
    r = run({"deform", p1, "--json"});
    CHECK(r.code == 0);
    CHECK(OJson::parse(r.out)["result"]["trunc"] == 90);
}

TEST_CASE("family command") {
    CliRun r = run({"family", "3", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "family (3,3): semigroup <5,7,13>, conductor 17"));
    CHECK(contains(r.out, "conductor bounds: 22 <= 23 < 26  hold"));
    CHECK(contains(r.out, "verdict: Certified"));

    r = run({"family", "3", "3", "--p", "11", "--json"});
    CHECK(r.code == 0);
    OJson res = OJson::parse(r.out)["result"];
    CHECK(res["clauses"]["delta"] == 4);
    CHECK(res["clauses"]["stci"] ==
          OJson({{"lhs", 24}, {"rhs", 22}, {"holds", true}}));
    CHECK(res["clauses"]["clause_c"] == true);
    CHECK(res["bounds"] == OJson({{"lhs", 22},
                                  {"mid", 23},
                                  {"rhs", 26},
                                  {"holds", true},
                                  {"d2_bound", true},
                                  {"d3_bound", true}}));
    CHECK(res["certificate"]["verdict"] == "certified");

    CHECK(run({"family", "2", "3"}).code == 2);          // b+2 >= 2a+1
    CHECK(run({"family", "3", "3", "--p", "5"}).code == 2); // p <= m
}

TEST_CASE("scan command emits JSON lines or CSV") {
    CliRun r = run({"scan", "2..3", "2..3", "--canonical-p"});
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 4);
    OJson row = OJson::parse(ls[0]);
    CHECK(row["a"] == 2);
    CHECK(row["b"] == 2);
    CHECK(row["p"] == 6);
    CHECK(row["verdict"] == "certified");
    row = OJson::parse(ls[1]);
    CHECK(row["valid"] == false);
    CHECK(row["skip_reason"] == "b + 2 >= 2a + 1");
    row = OJson::parse(ls[3]);
    CHECK(row["a"] == 3);
    CHECK(row["b"] == 3);
    CHECK(row["p"] == 11);
    CHECK(row["p_fallback"] == false);
    CHECK(row["clauses"]["clause_c"] == true);

    r = run({"scan", "2..3", "2..3", "--canonical-p", "--csv"});
    CHECK(r.code == 0);
    ls = lines_of(r.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "a,b,l,m,n,conductor,d1,d2,d3,p,bounds,constancy,stci,"
                   "clause_c,verdict,moh,note");
    for (const auto& line : ls) CHECK(csv_fields(line) == 17);
    CHECK(ls[1] == "2,2,4,5,7,7,12,15,14,6,1,1,1,0,certified,0,"
                   "certificate holds; germ known trivial");
    // a note containing a comma stays one quoted field
    CHECK(contains(ls[3], "\"germ known nonisomorphic to the monomial curve "
                          "(documented analysis, not computed)\""));

    CHECK(run({"scan", "2..3", "nope"}).code == 2);
    CHECK(run({"scan", "1..3", "2..3"}).code == 2);
    CHECK(run({"scan", "5..3", "2..3"}).code == 2);
}

TEST_CASE("parametrization JSON parser rejects malformed input") {
    CHECK_THROWS_AS(parse_parametrization(OJson::parse(
                        R"({"l":5,"m":7,"n":13,"tails":{"w":[]}})")),
                    ParseError);
    CHECK_THROWS_AS(parse_parametrization(OJson::parse(
                        R"({"l":5,"m":7,"n":13,"tails":{"y":[[11]]}})")),
                    ParseError);
    CHECK_THROWS_AS(parse_parametrization(OJson::parse(
                        R"({"m":7,"n":13,"tails":{}})")),
                    ParseError);
    CHECK_THROWS_AS(parse_parametrization(OJson::parse(
                        R"({"l":5,"m":7,"n":13,"tails":{"y":[[11,"1/0"]]}})")),
                    ParseError);

    Parametrization p = parse_parametrization(OJson::parse(
        R"({"l":5,"m":7,"n":13,"tails":{"y":[[11,"1/2"],[16,"-3"]]}})"));
    CHECK(p.tails[1].size() == 2);
    CHECK(p.tails[1][0].c == Rat(1) / 2);
    CHECK(p.tails[1][1].c == -3);
    CHECK(p.delta == 4);
}
