#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ouroboros/cli.hpp"

#include "schema_check.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ouroboros;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const testing::SchemaChecker& schema() {
  static const auto checker = testing::SchemaChecker::from_file(OUROBOROS_SCHEMA_PATH);
  return checker;
}

void require_valid(const Run& r) {
  const auto errors = schema().validate(r.json());
  CAPTURE(r.out);
  CHECK(errors.empty());
  if (!errors.empty()) MESSAGE(errors.front());
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("check on coefficients") {
  const auto ok = run({"check", "--coeffs", "0.25,0.75"});
  CHECK(ok.code == 0);
  require_valid(ok);
  CHECK(ok.json()["result"]["verdict"] == "holds_exact");
  CHECK(ok.json()["result"]["exact_coefficient_sum"] == "1");

  const auto thirds = run({"check", "--coeffs", "1/3,1/3,1/3"});
  CHECK(thirds.code == 0);
  CHECK(thirds.json()["result"]["exact_coefficient_sum"] == "1");

  const auto bad = run({"check", "--coeffs", "1,1"});
  CHECK(bad.code == 1);
  require_valid(bad);
  CHECK(bad.json()["result"]["verdict"] == "fails");
  CHECK(bad.json()["result"]["witness"].is_array());
}

TEST_CASE("check on expressions") {
  const auto r = run({"check", "--expr", "x1*x2", "--dim", "2", "--samples", "500", "--seed", "7"});
  CHECK(r.code == 1);
  require_valid(r);
  const auto res = r.json()["result"];
  CHECK(res["verdict"] == "fails");
  CHECK(res["witness"].size() == 2);
  CHECK(res["domain"]["count"] == 500);
  CHECK(r.json()["manifest"]["seed"] == 7);

  const auto constant = run({"check", "--expr", "7", "--dim", "3"});
  CHECK(constant.code == 0);
  CHECK(constant.json()["result"]["verdict"] == "holds_sampled");

  const auto div0 = run({"check", "--expr", "1/(x1-x1)"});
  CHECK(div0.code == 2);
}

TEST_CASE("check input errors") {
  const auto parse = run({"check", "--expr", "x1 + * x2"});
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("offset 5") != std::string::npos);
  CHECK(parse.err.find("       ^") != std::string::npos);

  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--coeffs", "1,abc"}).code == 2);
  CHECK(run({"check", "--coeffs", "1", "--expr", "x1"}).code == 2);
  CHECK(run({"check", "--expr", "x3", "--dim", "2"}).code == 2);
  CHECK(run({"check", "--coeffs", "1", "--samples", "many"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("pde command") {
  const auto system = run({"pde", "--coeffs", "0.25,0.25,0.25,0.25", "--eq", "system", "--n", "4"});
  CHECK(system.code == 0);
  require_valid(system);
  CHECK(system.json()["result"]["all_passed"] == true);
  CHECK(system.json()["result"]["checks"].size() == 5);

  const auto x1 = run({"pde", "--expr", "x1", "--eq", "I", "--beta", "2", "--n", "2"});
  CHECK(x1.code == 1);
  require_valid(x1);
  CHECK(x1.json()["result"]["checks"][0]["details"]["residual"] == "1");

  const auto alt = run({"pde", "--coeffs", "0.1,0.4,0.5,0.2", "--eq", "II", "--n", "4"});
  CHECK(alt.code == 0);
  require_valid(alt);
  CHECK(alt.json()["result"]["checks"][1]["name"] == "alternating_sums");

  const auto expr_system = run({"pde", "--expr", "(x1 + x2)/2", "--eq", "system"});
  CHECK(expr_system.code == 0);

  CHECK(run({"pde", "--coeffs", "1,2,3", "--eq", "system"}).code == 2);
  CHECK(run({"pde", "--coeffs", "1,2,3", "--eq", "II", "--prop3"}).code == 2);
  CHECK(run({"pde", "--coeffs", "1,2", "--eq", "III"}).code == 2);
  CHECK(run({"pde", "--coeffs", "1,2", "--eq", "I", "--beta", "3"}).code == 2);
  CHECK(run({"pde", "--coeffs", "1,2", "--eq", "I", "--n", "3"}).code == 2);
  CHECK(run({"pde", "--coeffs", "1,2"}).code == 2);
}

TEST_CASE("expect command") {
  const auto r = run({"expect", "--values", "1,2,3", "--probs", "0.2,0.3,0.5"});
  CHECK(r.code == 0);
  require_valid(r);
  CHECK(r.json()["result"]["expectation"].get<double>() == doctest::Approx(2.3));
  CHECK(r.json()["result"]["verdict"] == "holds");

  const auto bad = run({"expect", "--values", "1,2", "--probs", "0.5,0.6"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("probabilities sum to 1.1") != std::string::npos);

  const auto c = run({"expect", "--constant", "5"});
  CHECK(c.code == 0);
  CHECK(c.json()["result"]["expectation"] == 5.0);
  CHECK(c.json()["result"]["deviation"] == 0.0);

  const auto file = temp_file("ouroboros_rv.json", R"({"values": [0, 1], "probs": [0.5, 0.5]})");
  const auto f = run({"expect", "--rv", file.string()});
  CHECK(f.code == 0);
  CHECK(f.json()["result"]["expectation"] == 0.5);

  CHECK(run({"expect", "--rv", temp_file("ouroboros_bad.json", "{\"values\": [1]}").string()}).code == 2);
  CHECK(run({"expect", "--rv", "/nonexistent/rv.json"}).code == 2);
  CHECK(run({"expect", "--values", "1,2"}).code == 2);
  CHECK(run({"expect", "--constant", "1", "--values", "1", "--probs", "1"}).code == 2);
}

TEST_CASE("explore command") {
  const auto r = run({"explore", "--n", "2", "--degree", "1", "--starts", "20", "--seed", "42"});
  CHECK(r.code == 0);
  require_valid(r);
  const auto res = r.json()["result"];
  CHECK(res["counts"]["mean_like"].get<int>() > 0);
  CHECK(res["linear_case"]["dimension"] == 0);

  const auto mean = run({"explore", "--n", "2", "--degree", "2", "--starts", "1", "--seed", "0", "--init", "mean"});
  CHECK(mean.code == 0);
  CHECK(mean.json()["result"]["runs"][0]["objective"].get<double>() <= 1e-16);

  CHECK(run({"explore", "--n", "3"}).code == 2);
  CHECK(run({"explore", "--init", "sideways"}).code == 2);

  const auto out = std::filesystem::temp_directory_path() / "ouroboros_explore.json";
  const auto csv = std::filesystem::temp_directory_path() / "ouroboros_explore.csv";
  const auto w = run({"explore", "--starts", "3", "--out", out.string(), "--csv", csv.string()});
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream in(out);
  CHECK(schema().validate(Json::parse(in)).empty());
  std::ifstream rows(csv);
  std::string line;
  int count = 0;
  while (std::getline(rows, line)) ++count;
  CHECK(count == 4);
}

TEST_CASE("config files supply defaults that flags override") {
  const auto cfg = temp_file("ouroboros_cfg.json", R"({"n": 2, "degree": 1, "starts": 4, "seed": 3})");
  const auto a = run({"explore", "--config", cfg.string()});
  CHECK(a.code == 0);
  CHECK(a.json()["result"]["config"]["degree"] == 1);
  CHECK(a.json()["result"]["runs"].size() == 4);

  const auto b = run({"explore", "--config", cfg.string(), "--starts", "2"});
  CHECK(b.json()["result"]["runs"].size() == 2);

  const auto coeffs = temp_file("ouroboros_cfg2.json", R"({"coeffs": ["1/4", "3/4"]})");
  CHECK(run({"check", "--config", coeffs.string()}).code == 0);

  CHECK(run({"explore", "--config", temp_file("ouroboros_cfg3.json", "[1, 2]").string()}).code == 2);
  CHECK(run({"explore", "--config", "/nonexistent.json"}).code == 2);
  CHECK(run({"explore", "--config", temp_file("ouroboros_cfg4.json", R"({"bogus": 1})").string()}).code == 2);
}

TEST_CASE("version and help") {
  const auto v = run({"version"});
  CHECK(v.code == 0);
  CHECK(v.out == std::string("ouroboros ") + cli::kVersion + "\n");
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("explore") != std::string::npos);
}

TEST_CASE("reports are reproducible up to the timestamp") {
  for (const auto& argv : std::vector<std::vector<std::string>>{
           {"check", "--expr", "x1*x2", "--seed", "5"},
           {"pde", "--expr", "x1^3 - x2", "--eq", "II", "--n", "2"},
           {"explore", "--n", "4", "--degree", "2", "--starts", "3", "--seed", "8"}}) {
    auto a = run(argv).json();
    auto b = run(argv).json();
    a["manifest"].erase("timestamp");
    b["manifest"].erase("timestamp");
    CHECK(a.dump() == b.dump());
  }
}
