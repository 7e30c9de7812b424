#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanglegraph/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return TG_SOURCE_DIR "/fixtures/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(TG_BINARY_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

json without_timing(json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("family b") {
  auto r = run({"family", "b", "2,2,3,3,2"});
  REQUIRE(r.code == tg::cli::kOk);
  json j = r.report();
  CHECK(j["outputs"]["graph"]["pieces"].size() == 6);
  CHECK(j["outputs"]["graph"]["jsj_tori"] == 5);
  CHECK(j["verdicts"]["jsj"] == true);
  CHECK(j["outputs"]["graph"]["pieces"][0]["fractions"] == json({"12/5", "2/3"}));
  CHECK(j.contains("timing_ms"));
}

TEST_CASE("family q") {
  auto r = run({"family", "q", "2,2,2,3,3,2"});
  REQUIRE(r.code == tg::cli::kOk);
  json j = r.report();
  CHECK(j["outputs"]["graph"]["pieces"].size() == 5);
  CHECK(j["outputs"]["graph"]["jsj_tori"] == 4);
  CHECK(j["verdicts"]["jsj"] == true);
}

TEST_CASE("family constraint violation") {
  auto r = run({"family", "b", "2,2,3,2,1"});
  CHECK(r.code == tg::cli::kConstraintViolation);
  json j = r.report();
  CHECK(j["outputs"]["violations"] == json({"(p,q)=±(2,1) excluded"}));
  CHECK(run({"family", "b", "2,x,3"}).code == tg::cli::kInputError);
  CHECK(run({"family", "b", "2,2,3"}).code == tg::cli::kInputError);
  CHECK(run({"family", "z", "2,2,3,3,2"}).code == tg::cli::kInputError);
}

TEST_CASE("family through the shipped template") {
  auto r = run({"family", "b", "2,2,3,3,2", "--checks", "det", "--template", TG_SOURCE_DIR "/templates/b_family.tangle"});
  REQUIRE(r.code == tg::cli::kOk);
  json j = r.report();
  CHECK(j["outputs"]["exceptional_filling"]["determinant"] == 24480);
  CHECK(j["outputs"]["exceptional_filling"]["crossings"] == 32);
  CHECK(j["verdicts"]["det_equals_h1"] == true);
}

TEST_CASE("tangle command") {
  auto r = run({"tangle", fixture("zero.tangle"), "--fill", "1/0", "--certify-unknot"});
  REQUIRE(r.code == tg::cli::kOk);
  CHECK(r.report()["verdicts"]["unknot"] == "certified_unknot");

  r = run({"tangle", fixture("three_twists.tangle"), "--fill", "0", "--det"});
  REQUIRE(r.code == tg::cli::kOk);
  CHECK(r.report()["outputs"]["determinant"] == 3);

  r = run({"tangle", fixture("pretzel_det1.tangle"), "--bracket", "--certify-unknot"});
  REQUIRE(r.code == tg::cli::kOk);
  json j = r.report();
  CHECK(j["outputs"]["bracket"]["error"] == "TooLarge");
  CHECK(j["verdicts"]["unknot"] == "inconclusive");
}

TEST_CASE("tangle parse errors report a position") {
  std::string bad = write_temp("bad.tangle", "htwist(zero,\n  3 ]\n");
  auto r = run({"tangle", bad});
  CHECK(r.code == tg::cli::kInputError);
  CHECK(r.err.find("2:5") != std::string::npos);
  CHECK(run({"tangle", fixture("missing.tangle")}).code == tg::cli::kInputError);
}

TEST_CASE("mirror flag") {
  auto a = run({"tangle", fixture("three_twists.tangle"), "--fill", "0", "--jones"}).report();
  auto b = run({"--mirror", "tangle", fixture("three_twists.tangle"), "--fill", "0", "--jones"}).report();
  CHECK(a["outputs"]["jones"] == "4:1, 12:1, 16:-1");
  CHECK(b["outputs"]["jones"] == "-16:-1, -12:1, -4:1");
}

TEST_CASE("export") {
  auto r = run({"export", fixture("zero.tangle"), "--fill", "1/0", "--format", "dt"});
  CHECK(r.code == tg::cli::kOk);
  CHECK(r.out == "\n");
  r = run({"export", fixture("three_twists.tangle"), "--fill", "0", "--format", "dt"});
  CHECK(r.code == tg::cli::kOk);
  CHECK(r.out == "4,6,2\n");
  r = run({"export", fixture("three_twists.tangle"), "--fill", "0", "--format", "pd"});
  CHECK(r.code == tg::cli::kOk);
  CHECK(r.out == "X[6,3,1,4]\nX[4,1,5,2]\nX[2,5,3,6]\n");
  r = run({"export", fixture("zero.tangle"), "--fill", "0", "--format", "dt"});
  CHECK(r.code == tg::cli::kInputError);
  CHECK(r.out.empty());
}

TEST_CASE("crosscheck") {
  auto r = run({"crosscheck", "--random", "20", "--max-alpha", "7", "--seed", "1"});
  REQUIRE(r.code == tg::cli::kOk);
  json j = r.report();
  CHECK(j["verdicts"]["total"] == 20);
  CHECK(j["verdicts"]["equal"] == 20);

  r = run({"crosscheck", fixture("chains.txt")});
  REQUIRE(r.code == tg::cli::kOk);
  j = r.report();
  CHECK(j["outputs"]["cases"][0]["determinant"] == 4);
  CHECK(j["outputs"]["cases"][0]["h1_order"] == 4);

  r = run({"crosscheck", fixture("corrupted_chains.txt")});
  CHECK(r.code == tg::cli::kMismatch);
  CHECK(r.report()["verdicts"]["all_equal"] == false);
}

TEST_CASE("sweeps") {
  auto j = run({"sweep", "b"}).report();
  CHECK(j["outputs"]["valid"] == 2112);
  CHECK(j["verdicts"]["pass"] == 2112);
  CHECK(j["verdicts"]["all_pass"] == true);
  j = run({"sweep", "q"}).report();
  CHECK(j["verdicts"]["all_pass"] == true);
  auto r = run({"sweep", "degenerate"});
  CHECK(r.code == tg::cli::kOk);
  CHECK(r.report()["verdicts"]["pass"] == 56);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"family", "q", "2,2,2,3,3,2"},
      {"crosscheck", "--random", "15", "--max-alpha", "6", "--max-pieces", "3", "--seed", "42"},
      {"tangle", fixture("two_bridge_5_2.tangle"), "--jones", "--det", "--pd"},
      {"sweep", "degenerate"},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(without_timing(a.report()).dump() == without_timing(b.report()).dump());
  }
  auto a = run({"crosscheck", "--random", "15", "--seed", "1"}).report();
  auto b = run({"crosscheck", "--random", "15", "--seed", "2"}).report();
  CHECK(a["outputs"] != b["outputs"]);
}

TEST_CASE("config file") {
  std::string cfg = write_temp("config.json", R"({"mirror": true, "bracket_cap": 2})");
  auto r = run({"--config", cfg, "tangle", fixture("three_twists.tangle"), "--fill", "0", "--bracket"});
  REQUIRE(r.code == tg::cli::kOk);
  CHECK(r.report()["outputs"]["bracket"]["error"] == "TooLarge");
  std::string broken = write_temp("broken.json", "{");
  CHECK(run({"--config", broken, "sweep", "b"}).code == tg::cli::kInputError);
}

TEST_CASE("pretty view") {
  auto r = run({"--pretty", "family", "q", "2,2,2,3,3,2"});
  REQUIRE(r.code == tg::cli::kOk);
  CHECK(r.out.find("outputs.graph.pieces[0].base: disk") != std::string::npos);
}
