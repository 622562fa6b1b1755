#include "cli.hpp"

#include "motives/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv = {"motives"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = motives::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("cli_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("bundle motive with a floor prints the truncated series") {
    CliResult r = run({"bun", "--group", "A1-sc", "--curve", "genus=0", "--floor", "-9",
                       "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "L^-3 + L^-4 + 2 L^-5 + 2 L^-6 + 3 L^-7 + 3 L^-8 + 4 L^-9 + O(dim<-9)\n");
    CHECK(r.err.empty());
}

TEST_CASE("bundle motive without a floor prints the closed form") {
    CliResult r = run({"bun", "--group", "A1-sc", "--curve", "genus=0"});
    CHECK(r.code == 0);
    CHECK(r.out == "L^-3 / (1-L^-1)(1-L^-2)\n");
    CliResult j = run({"bun", "--group", "A1-sc", "--curve", "genus=0", "--format", "json"});
    CHECK(j.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["type"] == "closed");
    CHECK(parsed["scalar"] == "1");
}

TEST_CASE("zeta special value counted over F_2") {
    CliResult r = run({"zeta", "--curve", "fq:q=2,counts=[3]", "--special", "2",
                       "--realization", "count:q=2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("curve lints go to the error stream") {
    CliResult r = run({"zeta", "--curve", "numerator=[1,0]", "--special", "2"});
    CHECK(r.code == 0);
    CHECK(r.err.find("note:") != std::string::npos);
    CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("group facts in text and json") {
    CliResult r = run({"group", "--group", "G2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("label: G2-sc\n") != std::string::npos);
    CHECK(r.out.find("dim: 14\n") != std::string::npos);
    CHECK(r.out.find("degrees: 2 6\n") != std::string::npos);
    CHECK(r.out.find("weyl order: 12\n") != std::string::npos);
    CHECK(r.out.find("mu(G): ") != std::string::npos);

    CliResult j = run({"group", "--group", "G2", "--format", "json"});
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["root_datum"]["dim"] == 14);
    CHECK(parsed["group_motive"]["type"] == "closed");
    CHECK(parsed["classifying_motive"]["torsor"] == true);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"bun", "--curve", "genus=0"}).code == 2);            // missing group
    CHECK(run({"bun", "--group", "A1"}).code == 2);                 // missing curve
    CHECK(run({"zeta", "--curve", "genus=1"}).code == 2);           // missing special
    CHECK(run({"verify"}).code == 2);                               // missing suite
    CHECK(run({"bun", "--group", "Z9", "--curve", "genus=0"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"bun", "--group", "A1", "--curve", "genus=0", "--format", "yaml"}).code == 2);
    CHECK(run({"zeta", "--curve", "genus=1", "--special", "1"}).code == 2);  // divergent
    CliResult r = run({"bun", "--curve", "genus=0"});
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
    CliResult r = run({"bun", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--group") != std::string::npos);
}

TEST_CASE("verify single case passes and reports counts") {
    CliResult r = run({"verify", "--suite", "p1", "--group", "A2", "--floor", "-9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ok   p1-stratification") != std::string::npos);
    CHECK(r.out.find("PASS 1/1 checks\n") != std::string::npos);
}

TEST_CASE("verify failure exits with code 1") {
    // universal curve has no point counts, so the count case fails inside
    CliResult r = run({"verify", "--suite", "count", "--group", "A1", "--curve", "genus=1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify json output is a report array") {
    CliResult r = run({"verify", "--suite", "weyl", "--group", "B2", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() >= 2);
    CHECK(parsed[0]["check"] == "weyl-poincare");
    CHECK(parsed[0]["equal"] == true);
}

TEST_CASE("verify accepts repeated case parameters") {
    CliResult r = run({"verify", "--suite", "ring", "--param", "op=qfactorial",
                       "--param", "n=3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("qfactorial-identity") != std::string::npos);
    CHECK(run({"verify", "--suite", "ring", "--param", "opqfactorial"}).code == 2);
}

TEST_CASE("realize echoes series json bytewise under the universal realization") {
    motives::GradedMotiveSeries s;
    s.add_term(motives::MotiveMonomial(2, {1}), motives::Rational(5, 3));
    s.add_term(motives::MotiveMonomial::l_power(-1), -1);
    s.truncate_below(-4);
    std::string json = motives::series_to_json(s);
    TempFile f("series.json", json);
    CliResult r = run({"realize", "--input", f.path, "--realization", "universal",
                       "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == json + "\n");
}

TEST_CASE("realize applies the poincare specialization to closed input") {
    // mu(BSL_2) needs a floor first; realized at genus 0
    CliResult g = run({"group", "--group", "A1", "--format", "json"});
    nlohmann::json parsed = nlohmann::json::parse(g.out);
    TempFile f("closed.json", parsed["classifying_motive"].dump());
    CliResult fail = run({"realize", "--input", f.path, "--realization", "poincare"});
    CHECK(fail.code == 2);  // closed input without --floor
    CliResult r = run({"realize", "--input", f.path, "--realization", "poincare",
                       "--genus", "0", "--floor", "-8"});
    CHECK(r.code == 0);
    // t^-6 + t^-10 + t^-14 from L^-3 (1 + L^-2 + ...)
    CHECK(r.out == "t^-14 + t^-10 + t^-6\n");
}

TEST_CASE("realize counts a series against curve data") {
    motives::GradedMotiveSeries s;
    s.add_term(motives::MotiveMonomial::l_power(3), 1);
    s.add_term(motives::MotiveMonomial::unit(), -1);
    TempFile f("exact.json", motives::series_to_json(s));
    CliResult r = run({"realize", "--input", f.path, "--realization", "count:q=2"});
    CHECK(r.code == 0);
    CHECK(r.out == "7\n");
    CHECK(r.err.empty());  // exact sum, no tail note
}

TEST_CASE("config file supplies defaults but flags win") {
    TempFile cfg("flags.cfg",
                 "# settings\n"
                 "group = A1-sc\n"
                 "curve = genus=0\n"
                 "floor = -5\n");
    CliResult r = run({"bun", "--config", cfg.path});
    CHECK(r.code == 0);
    CHECK(r.out == "L^-3 + L^-4 + 2 L^-5 + O(dim<-5)\n");
    CliResult deeper = run({"bun", "--config", cfg.path, "--floor", "-7"});
    CHECK(deeper.code == 0);
    CHECK(deeper.out == "L^-3 + L^-4 + 2 L^-5 + 2 L^-6 + 3 L^-7 + O(dim<-7)\n");
    CHECK(run({"bun", "--config", "no_such_file.cfg"}).code == 2);
    TempFile bad("bad.cfg", "volume = 11\n");
    CHECK(run({"bun", "--config", bad.path}).code == 2);
}

TEST_CASE("count realization needs matching field sizes") {
    CliResult r = run({"bun", "--group", "A1", "--curve", "fq:q=2,counts=[3]",
                       "--realization", "count:q=5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("field size") != std::string::npos);
    CliResult ok = run({"bun", "--group", "A1", "--curve", "fq:q=2,counts=[3]",
                        "--realization", "count:q=2"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "3\n");
}

TEST_CASE("malformed realization specs") {
    CHECK(run({"realize", "--input", "missing.json"}).code == 2);
    TempFile f("garbage.json", "{\"type\":\"mystery\"}");
    CHECK(run({"realize", "--input", f.path}).code == 2);
    TempFile s("ok.json", "{\"type\":\"series\",\"floor\":null,\"monomials\":[]}");
    CHECK(run({"realize", "--input", s.path, "--realization", "count"}).code == 2);
    CHECK(run({"realize", "--input", s.path, "--realization", "sizzle"}).code == 2);
}
