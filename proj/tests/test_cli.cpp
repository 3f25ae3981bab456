#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nhol/cli.hpp"

using namespace nhol;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nhol");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("nhol_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("report JSON has the documented fields in order") {
  const Run r = run({"report", "--case", "e", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> want{"case", "p", "n", "group_order", "dim_s", "dim_sprime", "admissible",
                                      "t_order", "t_structure", "assumption_ok", "within_hypotheses", "checks"};
  CHECK(keys == want);
  CHECK(j["case"] == "e");
  CHECK(j["p"] == 5);
  CHECK(j["group_order"] == 9765625);
  CHECK(j["t_order"] == 16);
  CHECK(j["t_structure"] == "C4 x C4");
  CHECK(j["assumption_ok"] == true);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["pass"] == true);
  }
}

TEST_CASE("report JSON round trips byte for byte") {
  for (const char* c : {"a", "b", "d", "e"}) {
    const Run r = run({"report", "--case", c, "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("default primes") {
  CHECK(json::parse(run({"report", "--case", "a", "--json"}).out)["p"] == 5);
  CHECK(json::parse(run({"report", "--case", "b", "--json"}).out)["p"] == 3);
}

TEST_CASE("text report") {
  const Run r = run({"report", "--case", "b", "--prime", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C4") != std::string::npos);
  CHECK(r.out.find("result       PASS") != std::string::npos);
  const Run small = run({"report", "--case", "a", "--prime", "3", "--allow-small-p"});
  CHECK(small.code == 0);
  CHECK(small.out.find("outside") != std::string::npos);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run({"report", "--case", "a", "--prime", "3"}).code == kExitConfig);
  CHECK(run({"report", "--case", "zz"}).code == kExitConfig);
  CHECK(run({"report", "--case", "b", "--prime", "9"}).code == kExitConfig);
  CHECK(run({"report", "--case", "b", "--prime", "2"}).code == kExitConfig);
  CHECK(run({"report"}).code == kExitConfig);
  CHECK(run({"report", "--bogus"}).code == kExitConfig);
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitConfig);
  CHECK(run({"verify", "--suite", "oracle", "--prime", "7"}).code == kExitConfig);
  CHECK(run({"oracle", "--prime", "7"}).code == kExitConfig);
  CHECK(run({"report", "--custom", "/nonexistent/pi.txt"}).code == kExitConfig);
  CHECK(run({"report", "--custom", temp_file("bad.txt", "5 3\n1 0\n")}).code == kExitConfig);
  CHECK(run({"report", "--case", "b", "--workers", "0"}).code == kExitConfig);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("report") != std::string::npos);
}

TEST_CASE("custom input") {
  const std::string path = temp_file("b.txt", "5 3\n0 0 0\n0 0 0\n1 0 0\n");
  const Run r = run({"report", "--custom", path, "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["case"] == "custom");
  CHECK(j["t_order"] == 4);
  CHECK(j["within_hypotheses"] == false);
  CHECK(run({"report", "--custom", path, "--prime", "7"}).code == kExitConfig);
}

TEST_CASE("canonicalize") {
  const Run ok = run({"canonicalize", temp_file("c.txt", "5 3\n0 0 0\n3 0 0\n0 0 0\n"), "--json"});
  REQUIRE(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["label"] == "a");
  CHECK(j["basis_change"].size() == 3);
  const Run bad = run({"canonicalize", temp_file("r2.txt", "5 3\n1 0 0\n0 1 0\n0 0 0\n")});
  CHECK(bad.code == kExitNotRankOne);
  CHECK(run({"canonicalize"}).code == kExitConfig);
}

TEST_CASE("oracle subcommand") {
  const Run r = run({"oracle", "--prime", "3", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["t_order"] == 2);
  CHECK(j["pipeline_t_order"] == 2);
  CHECK(j["agree"] == true);
}

TEST_CASE("verify suites") {
  for (const char* s : {"group", "autc", "forms", "holo", "oracle"}) {
    CAPTURE(s);
    const Run r = run({"verify", "--suite", s});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  const Run j = run({"verify", "--suite", "holo", "--case", "e", "--json"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["failed"] == 0);
  CHECK(run({"verify", "--suite", "group", "--prime", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "all", "--prime", "7", "--case", "b"}).code == 0);
  const Run oracle = run({"verify", "--suite", "oracle", "--prime", "3"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("oracle T = 2, pipeline T = 2") != std::string::npos);
  const Run small = run({"verify", "--suite", "holo", "--prime", "3", "--allow-small-p"});
  CHECK(small.code == 0);
  CHECK(small.out.find("WARN") != std::string::npos);
}

TEST_CASE("worker count from the environment") {
  setenv("NHOL_WORKERS", "2", 1);
  CHECK(run({"verify", "--suite", "autc", "--case", "b"}).code == 0);
  unsetenv("NHOL_WORKERS");
}
