#include <doctest.h>

#include <json.hpp>

#include "swop/verify.hpp"

using namespace swop;

namespace {

VerifySpec small_spec(const ModeConfig& cfg) {
  VerifySpec spec;
  spec.alphas = {cfg.ratio(0, 1), cfg.ratio(1, 2)};
  spec.qs = {0, 2};
  spec.n_max = 6;
  spec.zeros_n_max = 4;
  spec.fault_delta = cfg.ratio(1, 1000);
  return spec;
}

}  // namespace

TEST_CASE("exact suite passes on a small grid") {
  ModeConfig cfg = ModeConfig::exact_config();
  SuiteReport rep = run_verify_suite(small_spec(cfg), cfg);
  CHECK(rep.all_pass());
  CHECK(rep.failures() == 0);
  CHECK(!rep.entries.empty());
  CHECK(rep.mode == ScalarMode::exact);
}

TEST_CASE("float suite passes on a small grid") {
  ModeConfig cfg = ModeConfig::floating_config(128);
  SuiteReport rep = run_verify_suite(small_spec(cfg), cfg);
  CHECK(rep.all_pass());
  CHECK(rep.precision_bits == 128);
}

TEST_CASE("empty grid gives an empty passing report") {
  ModeConfig cfg = ModeConfig::exact_config();
  VerifySpec spec;
  spec.fault_delta = cfg.ratio(1, 1000);
  SuiteReport rep = run_verify_suite(spec, cfg);
  CHECK(rep.entries.empty());
  CHECK(rep.all_pass());
}

TEST_CASE("default grid matches the documented parameter set") {
  ModeConfig cfg = ModeConfig::exact_config();
  VerifySpec spec = default_grid(cfg);
  REQUIRE(spec.alphas.size() == 6);
  CHECK(spec.alphas[0].str() == "-1/2");
  CHECK(spec.alphas[5].str() == "5/2");
  CHECK(spec.qs == std::vector<unsigned>{0, 1, 2, 3});
}

TEST_CASE("the injected fault is detected and reported") {
  ModeConfig cfg = ModeConfig::exact_config();
  VerifySpec spec = small_spec(cfg);
  spec.fault_gamma_index = 3;
  SuiteReport rep = run_verify_suite(spec, cfg);
  CHECK(rep.all_pass());
  bool seen = false;
  for (const CheckEntry& e : rep.entries) {
    if (e.identity == "gamma_fault_detected") {
      seen = true;
      CHECK(e.pass);
      CHECK(e.n == 4);
    }
  }
  CHECK(seen);
}

TEST_CASE("exact reports are byte identical across runs") {
  ModeConfig cfg = ModeConfig::exact_config();
  VerifySpec spec = small_spec(cfg);
  SuiteReport a = run_verify_suite(spec, cfg);
  SuiteReport b = run_verify_suite(spec, cfg);
  CHECK(render_json(a) == render_json(b));
  CHECK(render_csv(a) == render_csv(b));
  CHECK(render_text(a) == render_text(b));
}

TEST_CASE("json report follows the documented schema") {
  ModeConfig cfg = ModeConfig::exact_config();
  VerifySpec spec = small_spec(cfg);
  spec.n_max = 4;
  spec.with_zero_checks = false;
  SuiteReport rep = run_verify_suite(spec, cfg);

  nlohmann::json j = nlohmann::json::parse(render_json(rep));
  CHECK(j["suite"] == "verify");
  CHECK(j["mode"] == "exact");
  CHECK(j["status"] == "pass");
  CHECK(j["checks"].get<unsigned>() == rep.entries.size());
  CHECK(j["failures"] == 0);
  REQUIRE(j["entries"].is_array());
  REQUIRE(!j["entries"].empty());
  const auto& e = j["entries"][0];
  CHECK(e.contains("identity"));
  CHECK(e.contains("params"));
  CHECK(e["params"].contains("alpha"));
  CHECK(e["params"].contains("q"));
  CHECK(e.contains("n"));
  CHECK(e.contains("status"));
  CHECK(e.contains("detail"));
}

TEST_CASE("csv report has the documented header and row count") {
  ModeConfig cfg = ModeConfig::exact_config();
  VerifySpec spec = small_spec(cfg);
  spec.n_max = 4;
  spec.with_zero_checks = false;
  SuiteReport rep = run_verify_suite(spec, cfg);
  std::string csv = render_csv(rep);
  CHECK(csv.rfind("identity,alpha,q,n,status,detail\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == rep.entries.size() + 1);
}

TEST_CASE("text report ends with a summary line") {
  ModeConfig cfg = ModeConfig::exact_config();
  VerifySpec spec = small_spec(cfg);
  spec.n_max = 4;
  spec.with_zero_checks = false;
  SuiteReport rep = run_verify_suite(spec, cfg);
  std::string text = render_text(rep);
  CHECK(text.find("checks, 0 failures\n") != std::string::npos);
}

TEST_CASE("coefficient strings round-trip through the parser") {
  ModeConfig cfg = ModeConfig::exact_config();
  Scalar v = cfg.ratio(-20, 63);
  CHECK(cfg.parse(v.str()) == v);
  Scalar w = cfg.ratio(5, 21);
  CHECK(cfg.parse(w.str()) == w);
}
