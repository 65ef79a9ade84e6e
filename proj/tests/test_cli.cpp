#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "sra/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = sra::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SRA_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("counts for doubled A_3") {
  Result r = run({"counts", "--builtin", "doubled-A", "--rank", "3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["traces"] == 1);
  CHECK(j["supertraces"] == 2);
  CHECK(j["provenance"]["group"] == "doubled-A:3");
  Result text = run({"counts", "--builtin", "doubled-A", "--rank", "3"});
  CHECK(text.out.find("T = 1, S = 2") != std::string::npos);
}

TEST_CASE("ground level table for Z_2") {
  Result r = run({"glc", "--builtin", "cyclic", "--n", "2", "--kappa", "-1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sp(g0) = -eta0*P0") != std::string::npos);
  CHECK(r.out.find("sp(e) = P0") != std::string::npos);

  Result j = run({"glc", "--builtin", "cyclic", "--n", "2", "--kappa", "-1", "--json"});
  REQUIRE(j.code == 0);
  auto reports = nlohmann::json::parse(j.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["provenance"]["kappa"] == -1);
  for (const auto& row : reports[0]["table"])
    if (row["representative"] == "g0") CHECK(row["value"][0]["text"] == "-eta0");
}

TEST_CASE("parse diagnostics from eval") {
  Result r = run({"eval", "--group", data("z2.json"), "--kappa", "-1", "--expr", "a3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("position 1") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("eval reports exact values") {
  Result r = run({"eval", "--builtin", "cyclic:2", "--kappa", "-1", "--expr", "a1*a2"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "kappa = -1: sp(a1*a2) = (1/2 - 1/2*eta0^2)*P0\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"counts"}).code == 2);
  CHECK(run({"counts", "--builtin", "cyclic"}).code == 2);
  CHECK(run({"counts", "--builtin", "cyclic:2", "--group", data("z2.json")}).code == 2);
  CHECK(run({"counts", "--builtin", "nonsense", "--n", "2"}).code == 2);
  CHECK(run({"glc", "--builtin", "cyclic:2", "--kappa", "2"}).code == 2);
  CHECK(run({"eval", "--builtin", "cyclic:2"}).code == 2);
  CHECK(run({"gram", "--builtin", "cyclic:2", "--cutoff", "-1"}).code == 2);
  CHECK(run({"gram", "--builtin", "cyclic:2", "--kappa", "-1", "--assignment", "1,2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1") {
  CHECK(run({"counts", "--group", data("missing.json")}).code == 1);
  CHECK(run({"eval", "--builtin", "cyclic:2", "--expr", "a1 #"}).code == 1);
}

TEST_CASE("gram report") {
  Result r = run({"gram", "--builtin", "cyclic:2", "--kappa", "-1", "--cutoff", "0", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out)[0];
  CHECK(j["determinant"]["text"] == "1 - eta0^2");
  CHECK(j["rational_roots"] == nlohmann::json::parse(R"(["-1", "1"])"));
  CHECK(j["basis"].size() == 2);
  CHECK(j["assignment"] == nlohmann::json::parse(R"([["1"]])"));
}

TEST_CASE("other subcommands") {
  Result g = run({"group", "--builtin", "doubled-B", "--rank", "2", "--json"});
  REQUIRE(g.code == 0);
  auto j = nlohmann::json::parse(g.out);
  CHECK(j["size"] == 8);
  CHECK(j["eta_count"] == 2);
  CHECK(j["classes"].size() == 5);

  Result o = run({"oracle-check", "--builtin", "cyclic", "--n", "3", "--degree", "4"});
  CHECK(o.code == 0);

  Result p = run({"counts", "--builtin", "product", "--factors", "cyclic:2,cyclic:3", "--json"});
  REQUIRE(p.code == 0);
  auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["traces"] == 2);
  CHECK(pj["supertraces"] == 3);
}

TEST_CASE("selftest output is deterministic for a fixed seed") {
  std::vector<std::string> args = {"selftest", "--builtin", "cyclic:3", "--samples", "5", "--seed", "7", "--json"};
  Result a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["ok"] == true);
}

TEST_CASE("the cyclotomic order hint never changes results") {
  Result plain = run({"glc", "--builtin", "cyclic:4", "--json"});
  setenv("SRA_CYCLOTOMIC_ORDER", "8", 1);
  Result hinted = run({"glc", "--builtin", "cyclic:4", "--json"});
  unsetenv("SRA_CYCLOTOMIC_ORDER");
  CHECK(plain.out == hinted.out);
  CHECK(hinted.err.find("hint") != std::string::npos);
}
