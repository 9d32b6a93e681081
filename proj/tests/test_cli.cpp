#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "cubegroup/cli.hpp"

using namespace cubegroup;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("mdim") {
  auto g2 = json_of(run({"mdim", "g2"}));
  CHECK(g2["complex"] == 8);
  CHECK(g2["real"] == 16);
  CHECK(g2["method"] == "case-table");
  auto g3 = json_of(run({"mdim", "g3"}));
  CHECK(g3["complex"] == 20);
  CHECK(g3["real"] == 28);
  auto ab = json_of(run({"mdim", "abelian", "3,3,3"}));
  CHECK(ab["complex"] == 3);
  CHECK(ab["real"] == 6);
  CHECK(ab["method"] == "formula");
  auto z = json_of(run({"mdim", "abelian", "zk0m:3,8"}));
  CHECK(z["complex"] == 7);
  CHECK(z["real"] == 14);
  auto ex = json_of(run({"mdim", "exceptional"}));
  CHECK(ex["complex"] == 4);
  CHECK(ex["real"] == 6);
  CHECK(run({"mdim", "abelian"}).code == kExitUsage);
  CHECK(run({"mdim", "abelian", "2,y"}).code == kExitUsage);
  CHECK(run({"mdim", "g4"}).code == kExitUsage);
}

TEST_CASE("order") {
  CHECK(run({"order", "g2"}).out == "88179840\n");
  CHECK(run({"order", "g3"}).out == "43252003274489856000\n");
  CHECK(run({"order", "P"}).out == "9656672256000\n");
  CHECK(run({"order", "corner-group"}).out == "40320\n");
  CHECK(run({"order", "edge-group"}).out == "479001600\n");
  CHECK(run({"order", "g5"}).code == kExitUsage);
}

TEST_CASE("apply") {
  const auto h = json_of(run({"apply", "3", "U2 R' U2 R U R' U R"}));
  CHECK(h["edge_permutation"] == "(abc)");
  CHECK(h["corner_permutation"] == "()");
  CHECK(h["invariants"]["s"] == 0);
  CHECK(h["invariants"]["t"] == 0);
  const auto solved = json_of(run({"apply", "2", ""}));
  CHECK(solved["solved"] == true);
  CHECK_FALSE(solved.contains("edge_permutation"));
  const auto ur = json_of(run({"apply", "2", "U R"}));
  CHECK(ur["corner_permutation"] == "(13862)");  // (2486)(1342), U first
  CHECK(run({"apply", "2", "U Q"}).code == kExitUsage);
  CHECK(run({"apply", "5", "U"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto sec5 = run({"verify", "--filter", "thm-5.3", "--trials", "50"});
  CHECK(sec5.code == kExitPass);
  CHECK(sec5.out.find("thm-5.3-rep4-faithful") != std::string::npos);
  CHECK(run({"verify", "--filter", "nonexistent"}).code == kExitUsage);
  CHECK(run({"verify", "--trials", "0"}).code == kExitUsage);
  CHECK(run({"verify", "--seed", "x"}).code == kExitUsage);

  const auto a = run({"verify", "--json", "--seed", "42", "--filter", "prop-2.*", "--trials", "50"});
  const auto b = run({"verify", "--json", "--seed", "42", "--filter", "prop-2.*", "--trials", "50"});
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["summary"]["failed"] == 0);
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) {
    ids.push_back(c["id"]);
    CHECK(c["status"] == "pass");
  }
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK_FALSE(ids.empty());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}
