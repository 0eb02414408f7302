#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "icherednik/json_io.hpp"
#include "test_util.hpp"

using namespace icherednik;
using testutil::from_b;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args, int expected_status = 0) {
  const Run r = run(args);
  CHECK(r.status == expected_status);
  return json::parse(r.out);
}

std::string scratch_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "icherednik_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

json strip_timing(json j) {
  for (auto& c : j["checks"]) c.erase("ms");
  return j;
}

}  // namespace

TEST_CASE("relations") {
  const json r1 = run_json("relations --n 1 --b 1");
  CHECK(r1["ctable"][0]["terms"] == json::parse(R"j([["1", []]])j"));
  const json r2 = run_json("relations --n 1 --b 0,1");
  CHECK(r2["ctable"][0]["terms"] == json::parse(R"j([["2", ["E(1,1)"]]])j"));
  const json r3 = run_json("relations --n 2 --b 1");
  const AlgebraSpec s = spec_from_ctable_json(r3);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      CHECK(s.c(i, j) == (i == j ? NCElement::scalar(Field{}.one()) : NCElement(Field{})));
  CHECK(run("relations --n 1 --b 1 --format text").out.find("[Y(1),X(1)] = 1") != std::string::npos);
}

TEST_CASE("verify exit status") {
  const json a = run_json("verify --n 1 --b 0,1");
  for (const auto& c : a["checks"]) CHECK(c["status"] != "fail");
  run_json("verify --n 2 --b 0,1 --maxdeg 4");
  run_json("verify --n 1 --char 5 --b 0,1");
  const json bad = run_json("verify --n 2 --ctable " DATA_DIR "/invalid_ctable.json", 1);
  bool pbw_failed = false;
  for (const auto& c : bad["checks"])
    if (c["name"] == "pbw.consistency") pbw_failed = c["status"] == "fail";
  CHECK(pbw_failed);
}

TEST_CASE("verify is deterministic and sorted") {
  const json a = strip_timing(run_json("verify --n 2 --b 1,1"));
  const json b = strip_timing(run_json("verify --n 2 --b 1,1"));
  CHECK(a == b);
  std::vector<std::string> names;
  for (const auto& c : a["checks"]) names.push_back(c["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("center") {
  const HcAlgebra a1 = from_b(1, {0, 1});
  const CentralSet c1 = central_set_from_json(run_json("center --n 1 --b 0,1"), a1);
  const NCElement e = a1.e(1, 1);
  CHECK(c1.eta[0] == a1.multiply(a1.y(1), a1.x(1)) + a1.multiply(e, e) - e);

  const HcAlgebra a2 = from_b(1, {1});
  const CentralSet c2 = central_set_from_json(run_json("center --n 1 --b 1"), a2);
  CHECK(c2.eta[0] == a2.multiply(a2.y(1), a2.x(1)) + a2.e(1, 1));

  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  const CentralSet cu = central_set_from_json(run_json("center --n 2 --b 0"), u);
  for (int i = 1; i <= 2; ++i) CHECK(cu.eta[i - 1] == t_element(i, u));
}

TEST_CASE("blocks") {
  const std::string one = scratch_file("one.json", R"j([["1", "2"]])j");
  CHECK(run_json("blocks --n 2 --b 0,1 --weights " + one)["blocks"].size() == 1);
  const std::string many = scratch_file("many.json", R"j({"weights": [["1", "2"], ["0", "0"], ["-3", "1/2"]]})j");
  CHECK(run_json("blocks --n 2 --b 0 --weights " + many)["blocks"].size() == 1);
  const std::string line = scratch_file("line.json", R"j([["3"], ["-2"], ["1"], ["0"], ["5"]])j");
  CHECK(run_json("blocks --n 1 --b 0,1 --weights " + line)["blocks"].size() == 3);
}

TEST_CASE("charp") {
  const json r = run_json("charp --char 5 --c 1,2");
  CHECK(r["rank"] == 125);
  CHECK(r["pairwise_commuting"] == true);
  run_json("charp --char 3 --c 0");
}

TEST_CASE("config files and flag precedence") {
  const std::string cfg = scratch_file("cfg.json", R"j({"n": 1, "b": ["0", "1"], "format": "json"})j");
  const json a = run_json("relations --config " + cfg);
  CHECK(a["ctable"][0]["terms"] == json::parse(R"j([["2", ["E(1,1)"]]])j"));
  const json b = run_json("relations --config " + cfg + " --b 3");
  CHECK(b["ctable"][0]["terms"] == json::parse(R"j([["3", []]])j"));
  const auto out = std::filesystem::temp_directory_path() / "icherednik_cli_test" / "out.json";
  std::filesystem::remove(out);
  CHECK(run("relations --config " + cfg + " --out " + out.string()).status == 0);
  std::ifstream in(out);
  CHECK(json::parse(in) == a);
}

TEST_CASE("usage errors") {
  CHECK(run("").status != 0);
  CHECK(run("relations --n 0").status == 2);
  CHECK(run("relations --n 1 --b x").status == 2);
  CHECK(run("relations --n 1 --char 4").status == 2);
  CHECK(run("relations --format yaml").status != 0);
  CHECK(run("charp --char 0").status == 2);
  CHECK(run("relations --ctable /nonexistent.json").status == 2);
}
