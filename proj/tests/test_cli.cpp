#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "rba6/realize.hpp"

using nlohmann::json;
using namespace rba6;

namespace {

std::string cli() {
  const char* env = std::getenv("RBA6_BIN");
  return env ? env : "./rba6";
}

// Run a CLI invocation, capture stdout, return the exit status.
int run(const std::string& args, std::string& out) {
  out.clear();
  FILE* p = popen((cli() + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("check: accept and reject with the documented exit codes") {
  std::string out;
  CHECK(run("check --params \"1,1,1,1;-1,-1,-1,1\"", out) == 0);
  json j = json::parse(out);
  CHECK(j["schema"] == 1);
  CHECK(j["ok"] == true);
  CHECK(j["n"] == "6");
  CHECK(j["m_phi"] == "1");
  CHECK(j["m_chi"] == "2");

  // Structured params round trip.
  std::string lit;
  for (int i = 0; i < 4; ++i)
    lit += (i ? "," : "") + j["params_json"]["delta"][i].get<std::string>();
  lit += ";";
  for (int i = 0; i < 4; ++i)
    lit += (i ? "," : "") + j["params_json"]["phi"][i].get<std::string>();
  auto rt = ParameterSet::parse(lit);
  REQUIRE(rt);
  CHECK(rt->str() == j["params"]);

  CHECK(run("check --params \"1,1,1,1;0,0,0,0\"", out) == 1);
  j = json::parse(out);
  CHECK(j["ok"] == false);
  CHECK(std::string(j["reason"]).find("relation") != std::string::npos);

  CHECK(run("check --params \"garbage\"", out) == 2);
  CHECK(run("check --no-such-flag", out) == 2);
  CHECK(run("--help", out) == 0);
}

TEST_CASE("check --approx adds decimals without replacing exact strings") {
  std::string out;
  CHECK(run("check --approx --params \"10,10,20,20;1,1,-7,2\"", out) == 0);
  json j = json::parse(out);
  CHECK(j["m_chi"]["str"] == "30");
  CHECK(j["m_chi"]["approx"].get<double>() == doctest::Approx(30.0));
}

TEST_CASE("construct JSON round trip re-verifies exactly") {
  for (const char* args :
       {"construct --params \"1,1,1,1;-1,-1,-1,1\"",
        "construct --params \"15,10,6,5;0,0,-1,0\"",
        "construct --params \"15,10,6,5;0,0,-1,0\" --signs \"-,+,-\"",
        "construct --params \"20,10,10,20;-7,1,1,2\""}) {
    CAPTURE(args);
    std::string out;
    REQUIRE(run(args, out) == 0);
    json j = json::parse(out);
    REQUIRE(j["ok"] == true);
    CHECK(j["violations"].empty());

    // Rebuild the transition matrix from the emitted term lists and verify
    // from scratch.
    TransitionMatrix P;
    P.sym_index = j["sym_index"].get<int>();
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        std::vector<std::pair<std::string, std::string>> terms;
        for (auto& t : j["P"][r][c]["terms"]) {
          std::string rad = t[1].is_string() ? t[1].get<std::string>()
                                             : std::to_string(t[1].get<long>());
          terms.push_back({t[0].get<std::string>(), rad});
        }
        P.P[r][c] = Surd::from_term_list(terms);
        CHECK(P.P[r][c].str() == j["P"][r][c]["str"]);
      }
    auto ps = ParameterSet::parse(j["params"].get<std::string>());
    REQUIRE(ps);
    CHECK(verify_transition(P, character_table(*ps)).ok());
  }
}

TEST_CASE("construct rejections") {
  std::string out;
  // Degenerate ratio configuration: validation rejection, exit 1.
  CHECK(run("construct --params \"2,2,2,1;-1/4,-1/4,-1/4,-1/8\"", out) == 1);
  CHECK(json::parse(out)["ok"] == false);
  // Bad sign literal: usage error.
  CHECK(run("construct --params \"1,1,1,1;-1,-1,-1,1\" --signs \"+,x,+\"", out) == 2);
}

TEST_CASE("lambda: sparse nonzero entries and product expansions") {
  std::string out;
  REQUIRE(run("lambda --params \"1,1,1,1;-1,-1,-1,1\"", out) == 0);
  json j = json::parse(out);
  REQUIRE(j["ok"] == true);
  CHECK(j["integral"] == true);
  CHECK(j["table_algebra"] == true);
  CHECK(j["standard"] == true);
  // S3 is a group algebra: exactly one nonzero entry per product pair, all 1.
  CHECK(j["lambda"].size() == 36);
  for (auto& e : j["lambda"]) CHECK(e["value"]["str"] == "1");
  CHECK(j["products"].size() == 36);
  bool saw = false;
  for (auto& p : j["products"])
    if (p.get<std::string>() == "b0*b0 = b0") saw = true;
  CHECK(saw);

  REQUIRE(run("lambda --params \"3,3,1,3;3,3,-1,-3\"", out) == 0);
  j = json::parse(out);
  CHECK(j["integral"] == false);
}

TEST_CASE("enumerate formats at order 6") {
  std::string out;
  REQUIRE(run("enumerate --max-order 6 --format json", out) == 0);
  json j = json::parse(out);
  REQUIRE(j["records"].size() == 1);
  CHECK(j["records"][0]["params"] == "1,1,1,1;-1,-1,-1,1");
  CHECK(j["records"][0]["n"] == "6");

  REQUIRE(run("enumerate --max-order 6 --format csv", out) == 0);
  CHECK(out.substr(0, 2) == "n,");
  CHECK(out.find("6,1,1,1,1,-1,-1,-1,1,1,2,1,") != std::string::npos);

  REQUIRE(run("enumerate --max-order 6 --format md", out) == 0);
  CHECK(out.find("| n | [delta; phi] | (m_phi, m_chi) | comment |") == 0);
  CHECK(out.find("| 6 | [1,1,1,1;-1,-1,-1,1] |") != std::string::npos);

  CHECK(run("enumerate --max-order 6 --format xml", out) == 2);
  CHECK(run("enumerate --max-order 5 --format json", out) == 2);
}

TEST_CASE("enumerate output is independent of RBA6_JOBS") {
  std::string base, jobs;
  REQUIRE(run("enumerate --max-order 30 --format csv", base) == 0);
  setenv("RBA6_JOBS", "3", 1);
  int rc = run("enumerate --max-order 30 --format csv", jobs);
  unsetenv("RBA6_JOBS");
  REQUIRE(rc == 0);
  CHECK(base == jobs);
}

TEST_CASE("classify report") {
  std::string out;
  REQUIRE(run("classify --params \"1,1,1,1;-1,-1,-1,1\"", out) == 0);
  json j = json::parse(out);
  CHECK(j["ok"] == true);
  CHECK(j["primitive"] == false);
  CHECK(j["closed_subsets"].size() == 6);
  CHECK(j["family"]["detail"] == "C3:K2 (the group S3)");
  CHECK(j["mphi1"]["kind"] == "non-real-bipartite");
  CHECK(j["mphi1"]["integral_predicted"] == true);

  REQUIRE(run("classify --params \"10,10,20,20;1,1,-7,2\"", out) == 0);
  j = json::parse(out);
  CHECK(j["primitive"] == true);
  CHECK(j["evenness_pass"] == true);
  REQUIRE(j["literature"].size() == 2);
}
