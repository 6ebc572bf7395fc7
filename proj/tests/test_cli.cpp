#include "doctest.h"

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using trigcert::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 64") {
    CHECK(call({}).code == 64);
    CHECK(call({"frobnicate"}).code == 64);
    CHECK(call({"certify"}).code == 64);
    CHECK(call({"certify", "--case", "no-such-case"}).code == 64);
    CHECK(call({"certify", "--case", "conjecture-2-upper"}).code == 64);
    CHECK(call({"certify", "--case", "thm3.1-lower", "--n", "2"}).code == 64);
    CHECK(call({"certify", "--case", "wilker-1.1", "--precision", "16"}).code == 64);
    CHECK(call({"certify", "--case", "wilker-1.1", "--delta0", "3/4"}).code == 64);
    CHECK(call({"certify", "--case", "wilker-1.1", "--max-depth", "0"}).code == 64);
    CHECK(call({"certify", "--case", "wilker-1.1", "--format", "csv"}).code == 64);
    CHECK(call({"series", "--expr", "nope"}).code == 64);
    CHECK(call({"appendix", "--check", "D"}).code == 64);
    CHECK(call({"sweep", "--case", "thm3.3", "--grid", "1"}).code == 64);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("series prints the exact expansion") {
    const Result r = call({"series", "--expr", "wilker-ratio", "--order", "14"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "8/45\n-8/945\n16/14175\n8/467775\n3184/638512875\n272/638512875\n7264/162820783125\n");
    const Result t = call({"series", "--expr", "tan", "--order", "5"});
    CHECK(t.out == "x^1 1\nx^3 1/3\nx^5 2/15\n");
}

TEST_CASE("certify emits a certificate and an exit status") {
    const Result r = call({"certify", "--case", "thm3.3-lower"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "PROVED");
    CHECK(j["case"] == "thm3.3-lower");
    CHECK(j["leaves"].is_array());
    CHECK(j["leaves"][0].contains("precision"));
    CHECK(j["endpoints"]["zero"].contains("valuation"));
    CHECK(j["stats"].contains("nodes"));

    CHECK(call({"certify", "--case", "mortici-1.12-upper"}).code == 1);
    CHECK(call({"certify", "--case", "thm3.3-upper", "--tighten", "1/1000"}).code == 1);
    const Result md = call({"certify", "--case", "lemma2.1-upper", "--n", "3", "--format", "markdown"});
    CHECK(md.code == 0);
    CHECK(md.out.find("**PROVED**") != std::string::npos);
}

TEST_CASE("constants shows exact forms and certified decimals") {
    const Result r = call({"constants"});
    CHECK(r.code == 0);
    for (const char* s : {"16/14175", "0.001128", "0.001209", "0.004727", "4/1575", "0.002539", "23/33600",
                          "0.000684", "0.000894", "0.0012901", "83/100800", "0.0008234"})
        CHECK_MESSAGE(r.out.find(s) != std::string::npos, s);
    const auto j = nlohmann::json::parse(call({"constants", "--format", "json"}).out);
    CHECK(j.size() == 4);
}

TEST_CASE("list, bernoulli, appendix, sweep") {
    const Result l = call({"list"});
    CHECK(l.code == 0);
    CHECK(l.out.find("thm3.3-lower") != std::string::npos);
    CHECK(nlohmann::json::parse(call({"list", "--format", "json"}).out).size() > 40);

    const Result b = call({"bernoulli", "--upto", "6"});
    CHECK(b.code == 0);
    CHECK(b.out.find("|B_12| = 691/2730") != std::string::npos);
    CHECK(b.out.find("PASS") != std::string::npos);

    for (const char* which : {"A", "B", "C", "E", "S"}) CHECK(call({"appendix", "--check", which}).code == 0);
    CHECK(call({"appendix", "--check", "C", "--n-max", "30"}).out.find("n = 6..30") != std::string::npos);

    const Result s = call({"sweep", "--case", "chain-1.7", "--grid", "4"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("x,gap_lower,gap_upper,dominance\n", 0) == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 5);
    // The sharp lower bound is looser than the Sumner one near pi/2.
    CHECK(call({"sweep", "--case", "thm3.3", "--versus", "sumner-1.2", "--grid", "200"}).code == 1);
    CHECK(call({"sweep", "--case", "thm3.3", "--versus", "chen-cheung-1.8", "--grid", "200"}).code == 0);
}

TEST_CASE("report is deterministic and written to --out") {
    const std::string path = "test_cli_report.md";
    const Result a = call({"report", "--grid", "20", "--out", path});
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::remove(path.c_str());
    const Result b = call({"report", "--grid", "20"});
    CHECK(a.out.empty());
    CHECK(buf.str() == b.out);
    CHECK(a.code == b.code);
    CHECK(b.out.find("| mortici-1.12-upper |  | REFUTED | REFUTED |") != std::string::npos);
    CHECK(b.out.find("76 of 76 certificates have the expected status.") != std::string::npos);
    CHECK(b.out.find("| FAIL |") == std::string::npos);
}
