#include "arcic/cli.hpp"
#include "arcic/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace arcic;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes `text` to a fresh file in the temp directory and returns its path.
std::string write_temp(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "arcic_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("hilbert on the quadrant") {
  auto path = write_temp("quadrant.json", R"({"rank": 2, "generators": [[1,0],[0,1]]})");
  Run r = run({"hilbert", "--cone", path});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["hilbert_basis"] == Json::parse("[[0,1],[1,0]]"));
  CHECK(j["grading"] == Json::parse("[1,1]"));
  CHECK(j["status"] == "pass");
  CHECK(j["command"] == "hilbert");
}

TEST_CASE("output is byte-identical on repeat and under input permutation") {
  auto a = write_temp("c12a.json", R"({"rank": 2, "generators": [[1,0],[1,2]]})");
  auto b = write_temp("c12b.json", R"({"generators": [[1,2],[1,0],[1,2]], "rank": 2})");
  for (const std::string cmd : {"hilbert", "toric"}) {
    std::vector<std::string> extra = cmd == "toric" ? std::vector<std::string>{"--bound", "4"} : std::vector<std::string>{};
    auto args_a = std::vector<std::string>{cmd, "--cone", a};
    auto args_b = std::vector<std::string>{cmd, "--cone", b};
    args_a.insert(args_a.end(), extra.begin(), extra.end());
    args_b.insert(args_b.end(), extra.begin(), extra.end());
    Run first = run(args_a);
    CHECK(first.code == 0);
    CHECK(run(args_a).out == first.out);
    CHECK(run(args_b).out == first.out);
  }
}

TEST_CASE("bad rank is an input error with exit code 2") {
  auto path = write_temp("bad_rank.json", R"({"rank": -1, "generators": []})");
  Run r = run({"hilbert", "--cone", path});
  CHECK(r.code == 2);
  Json j = r.json();
  CHECK(j["error"]["kind"] == "input");
  CHECK(j["error"]["path"] == "/rank");
}

TEST_CASE("malformed and missing files") {
  auto path = write_temp("malformed.json", "{\"rank\": 2,");
  CHECK(run({"hilbert", "--cone", path}).code == 2);
  CHECK(run({"hilbert", "--cone", "/nonexistent/cone.json"}).json()["error"]["kind"] == "input");
}

TEST_CASE("toric") {
  auto path = write_temp("c12.json", R"({"rank": 2, "generators": [[1,0],[1,2]]})");
  Run r = run({"toric", "--cone", path, "--lambda", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.json()["coeff"] == Json::parse(R"({"0": 2})"));

  Run s = run({"toric", "--cone", path, "--bound", "4"});
  CHECK(s.code == 0);
  Json terms = s.json()["terms"];
  CHECK(terms.size() == 9);
  for (const auto& t : terms) {
    if (t["lambda"] == Json::parse("[2,2]")) CHECK(t["coeff"] == Json::parse(R"({"0": 2})"));
  }

  CHECK(run({"toric", "--cone", path}).code == 2);
  CHECK(run({"toric", "--cone", path, "--lambda", "0,1"}).json()["error"]["kind"] == "domain");
  CHECK(run({"toric", "--cone", path, "--lambda", "1"}).json()["error"]["path"] == "/lambda");
}

TEST_CASE("strata") {
  auto path = write_temp("c12s.json", R"({"rank": 2, "generators": [[1,0],[1,2]]})");
  Run r = run({"strata", "--cone", path, "--lambda", "2,2"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["multisets"].size() == 3);
  CHECK(j["m_lambda"] == 2);
  CHECK(j["maxima"].size() == 2);
  CHECK(j["covers"] == Json::parse("[[1,0],[2,0]]"));
  CHECK(j["results"].size() == 3);
}

TEST_CASE("global") {
  auto path = write_temp("line.json", R"({"rank": 1, "generators": [[1]]})");
  Run r = run({"global", "--cone", path, "--q", "2", "--bound", "3"});
  CHECK(r.code == 0);
  Json values = r.json()["values"];
  REQUIRE(values.size() == 4);
  // effective divisors of degree n on P^1 over F_2: 1, 3, 7, 15
  const std::vector<int> expected{1, 3, 7, 15};
  for (std::size_t n = 0; n < 4; ++n) CHECK(values[n]["values"]["direct"] == expected[n]);
  CHECK(run({"global", "--cone", path, "--q", "1", "--bound", "3"}).code == 2);
}

TEST_CASE("lmonoid") {
  Run r = run({"lmonoid", "--n-gl", "2", "--rep", "standard", "--mu", "1,1", "--q-numeric", "3"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["ic"] == Json::parse(R"({"0": 1})"));
  CHECK(j["psi"] == Json::parse(R"({"-2": 1})"));
  CHECK(j["n"] == 2);
  CHECK(j["nu_pairing"] == "0");
  CHECK(j["specialization"]["psi"]["rational"] == "1/3");

  Run m = run({"lmonoid", "--n-gl", "2", "--mu", "1,1", "--convention", "minus"});
  CHECK(m.code == 0);
  CHECK(m.json()["ic"] == Json::parse(R"({"-4": 1})"));
  CHECK(m.json()["status"] == "indeterminate");

  CHECK(run({"lmonoid", "--n-gl", "2", "--rep", "2", "--mu", "1,0"}).json()["error"]["kind"] == "unsupported");
  CHECK(run({"lmonoid", "--n-gl", "2", "--mu", "1,-1"}).json()["error"]["kind"] == "domain");
  CHECK(run({"lmonoid", "--n-gl", "2", "--mu", "1,0,0"}).code == 2);
  CHECK(run({"lmonoid", "--n-gl", "2", "--mu", "1,0", "--convention", "sideways"}).code == 2);
}

TEST_CASE("argument errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"hilbert"}).json()["error"]["kind"] == "input");
  CHECK(run({"check-all", "--suite", "nope"}).code == 2);
  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("lmonoid") != std::string::npos);
}

TEST_CASE("check-all") {
  Run r = run({"check-all", "--suite", "desk"});
  CHECK(r.code == 0);
  Json j = r.json();
  REQUIRE(j["criteria"].size() == 8);
  for (const auto& c : j["criteria"]) CHECK(c["passed"] == true);
}
