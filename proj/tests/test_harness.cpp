#include <cmath>

#include "doctest.h"
#include "hyperlp/errors.hpp"
#include "hyperlp/harness.hpp"
#include "hyperlp/jensen.hpp"

using namespace hyperlp;

namespace {

const CaseResult* find(const SuiteReport& r, const std::string& key) {
  for (const auto& c : r.cases) {
    if (c.key == key) return &c;
  }
  return nullptr;
}

void check_clean(const SuiteReport& r) {
  CHECK(r.failed() == 0);
  CHECK(r.undetermined() == 0);
  CHECK(r.run() == r.passed());
  for (const auto* f : r.failures()) MESSAGE(f->key << ": " << f->detail.dump());
}

}  // namespace

TEST_CASE("report JSON layout and counts") {
  SuiteReport r;
  r.suite_id = "demo";
  r.config["a"] = 1;
  r.cases.push_back({"k1", CaseOutcome::Pass, {}});
  r.cases.push_back({"k2", CaseOutcome::Fail, {}});
  r.cases.push_back({"k3", CaseOutcome::Undetermined, {}});
  r.cases.push_back({"k4", CaseOutcome::Recorded, {}});
  CHECK(r.run() == 3);
  CHECK(r.run() == r.passed() + r.undetermined() + static_cast<long>(r.failures().size()));
  const Json j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"suite_id", "config", "cases", "summary"});
  std::vector<std::string> case_keys;
  for (auto it = j["cases"][0].begin(); it != j["cases"][0].end(); ++it) case_keys.push_back(it.key());
  CHECK(case_keys == std::vector<std::string>{"key", "verdict", "detail"});
  std::vector<std::string> summary_keys;
  for (auto it = j["summary"].begin(); it != j["summary"].end(); ++it) summary_keys.push_back(it.key());
  CHECK(summary_keys == std::vector<std::string>{"run", "passed", "undetermined", "failed", "unweighted"});
  CHECK(j["cases"][1]["verdict"] == "fail");
  CHECK(j["summary"]["unweighted"] == 1);
}

TEST_CASE("delta-difference: closed-form edge cases and small fuzz") {
  DeltaDifferenceConfig cfg;
  cfg.trials = 60;
  const SuiteReport r = suite_delta_difference(cfg);
  check_clean(r);
  CHECK(r.run() > 60);
  const CaseResult* e0 = find(r, "edge-000");
  REQUIRE(e0 != nullptr);
  CHECK(e0->outcome == CaseOutcome::Pass);
  // -e/(e-1) and 1/(e-1)
  const double want0 = -std::exp(1.0) / (std::exp(1.0) - 1.0);
  CHECK(std::stod(e0->detail["roots"][0].get<std::string>()) == doctest::Approx(want0).epsilon(1e-12));
  const CaseResult* e1 = find(r, "edge-001");
  CHECK(std::stod(e1->detail["roots"][0].get<std::string>()) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-12));
  CHECK(find(r, "edge-002")->detail["exact_gap_roots"] == 2);
}

TEST_CASE("delta-difference: 1000 trials at delta = 3/10") {
  DeltaDifferenceConfig cfg;
  cfg.deltas = {mpq_class(3, 10)};
  cfg.edge_cases = false;
  const SuiteReport r = suite_delta_difference(cfg);
  CHECK(r.run() == 1000);
  check_clean(r);
}

TEST_CASE("delta-difference: seeds give byte-identical reports, serial or parallel") {
  DeltaDifferenceConfig cfg;
  cfg.trials = 40;
  HarnessOptions serial;
  serial.parallel = false;
  const std::string a = suite_delta_difference(cfg).dump();
  CHECK(a == suite_delta_difference(cfg).dump());
  CHECK(a == suite_delta_difference(cfg, serial).dump());
  cfg.seed = 43;
  CHECK(a != suite_delta_difference(cfg).dump());
}

TEST_CASE("delta-difference rejects bad configuration") {
  DeltaDifferenceConfig cfg;
  cfg.deltas = {mpq_class(0)};
  CHECK_THROWS_AS(suite_delta_difference(cfg), DomainError);
}

TEST_CASE("Ono grid on a small window") {
  OnoGridConfig cfg;
  cfg.alphas = {mpq_class(1), mpq_class(149, 100), mpq_class(151, 100)};
  cfg.n_max = 4;
  cfg.d_max = 4;
  const SuiteReport r = suite_ono_grid(cfg);
  check_clean(r);
  const CaseResult* c = find(r, "alpha=1/n=001/d=02");
  REQUIRE(c != nullptr);
  CHECK(c->outcome == CaseOutcome::Pass);
  CHECK(c->detail["jensen"] == "Hyperbolic");
  CHECK(c->detail["bessel_form"] == "Hyperbolic");
  CHECK(find(r, "alpha=1/n=003/d=00")->outcome == CaseOutcome::Pass);
  const CaseResult* out = find(r, "alpha=151/100/n=002/d=03");
  REQUIRE(out != nullptr);
  CHECK(out->outcome == CaseOutcome::Recorded);
  CHECK_FALSE(out->detail.contains("bessel_form"));
  // trend: four report-only entries, shrinking distances
  const CaseResult* t25 = find(r, "trend/n=025");
  const CaseResult* t200 = find(r, "trend/n=200");
  REQUIRE(t25 != nullptr);
  REQUIRE(t200 != nullptr);
  CHECK(t200->outcome == CaseOutcome::Recorded);
  CHECK(t200->detail["relative_root_distance"].get<double>() < t25->detail["relative_root_distance"].get<double>());
  CHECK(r.recorded() == 4 + 4 * 5);

  cfg.alphas = {mpq_class(-1)};
  CHECK_THROWS_AS(suite_ono_grid(cfg), DomainError);
}

TEST_CASE("Ono grid first index respects n >= alpha/24") {
  OnoGridConfig cfg;
  cfg.alphas = {mpq_class(49)};
  cfg.n_max = 4;
  cfg.d_max = 1;
  const SuiteReport r = suite_ono_grid(cfg);
  CHECK(find(r, "alpha=49/n=001/d=00") == nullptr);
  CHECK(find(r, "alpha=49/n=003/d=00") != nullptr);
  CHECK(r.run() == 0);  // all outside the proved range
}

TEST_CASE("LP embedding") {
  SUBCASE("Gaussian with beta = 0 gives (1 + x)^d") {
    LpEmbeddingConfig cfg;
    cfg.function = LpFunction::Gaussian;
    cfg.parameter = 0;
    cfg.d_max = 6;
    const SuiteReport r = suite_lp_embedding(cfg);
    check_clean(r);
    const auto& roots = find(r, "d=06")->detail["roots"];
    REQUIRE(roots.size() == 1);
    CHECK(roots[0]["multiplicity"] == 6);
  }
  SUBCASE("Bessel-Clifford nu = 3/2") {
    const SuiteReport r = suite_lp_embedding({});
    check_clean(r);
    CHECK(r.run() == 13);
    CHECK(find(r, "envelope")->outcome == CaseOutcome::Recorded);
  }
  SUBCASE("reciprocal Gamma matches Laguerre") {
    LpEmbeddingConfig cfg;
    cfg.function = LpFunction::ReciprocalGamma;
    cfg.t0 = 2;
    cfg.d_max = 8;
    const SuiteReport r = suite_lp_embedding(cfg);
    check_clean(r);
    for (const auto& c : r.cases) {
      if (c.key != "envelope") CHECK(c.detail["laguerre_match"] == true);
    }
  }
  SUBCASE("sign change is rejected") {
    LpEmbeddingConfig cfg;
    cfg.function = LpFunction::BesselClifford;
    cfg.parameter = mpq_class(1, 2);
    cfg.t0 = -3;  // first zero of C_1/2 is at -pi^2/4
    cfg.d_max = 4;
    CHECK_THROWS_AS(suite_lp_embedding(cfg), SignChangeDetected);
  }
}

TEST_CASE("Gaussian suite") {
  GaussianConfig cfg;
  cfg.d_max = 6;
  const SuiteReport r = suite_gaussian(cfg);
  check_clean(r);
  CHECK(r.run() == 7 + 6);
  const CaseResult* d1 = find(r, "roots/d=01");
  CHECK(d1->outcome == CaseOutcome::Pass);
  const CaseResult* d2 = find(r, "roots/d=02");
  REQUIRE(d2->detail.contains("min_gap"));
  CHECK(std::stod(d2->detail["min_gap"].get<std::string>()) >= 1.0);
  CHECK(find(r, "recursion/d=05")->detail["agreeing"] == 20);
  cfg.beta = 0;
  CHECK_THROWS_AS(suite_gaussian(cfg), DomainError);
}

TEST_CASE("Laguerre delta suite") {
  SUBCASE("defaults") {
    const SuiteReport r = suite_laguerre_delta({});
    check_clean(r);
    CHECK(find(r, "main/delta=1/d=02")->detail["laguerre_match"] == true);
    CHECK(find(r, "alt/delta=1/2/d=03")->outcome == CaseOutcome::Recorded);
  }
  SUBCASE("delta = 1/2, nu = 1/2") {
    LaguerreDeltaConfig cfg;
    cfg.nu = mpq_class(1, 2);
    cfg.deltas = {mpq_class(1, 2)};
    cfg.d_max = 8;
    const SuiteReport r = suite_laguerre_delta(cfg);
    check_clean(r);
    CHECK(r.run() == 9);
  }
  SUBCASE("nu must exceed -1") {
    LaguerreDeltaConfig cfg;
    cfg.nu = -1;
    CHECK_THROWS_AS(suite_laguerre_delta(cfg), DomainError);
  }
}

TEST_CASE("Laguerre identity at d = 2, nu = 0") {
  // J_2 of 1/Gamma(1 + k) is 1 + 2x + x^2/2; times Gamma(3)/2! it equals L_2^0(-x).
  const SuiteReport r = suite_laguerre_delta({mpq_class(0), {mpq_class(1)}, 2});
  check_clean(r);
  const IntervalPolynomial l = laguerre_poly(2, Real(0, 128));
  CHECK(l.coefficient(0).overlaps(Real(1, 128)));
  CHECK(l.coefficient(1).overlaps(Real(2, 128)));
  CHECK(l.coefficient(2).overlaps(Real::from_double(0.5)));
}

TEST_CASE("zeros suite, small") {
  ZerosConfig cfg;
  cfg.count = 6;
  const SuiteReport r = suite_zeros(cfg);
  check_clean(r);
  CHECK(r.run() == 3 * 5 + 6);
  CHECK(find(r, "nu=1/2/closed=06")->outcome == CaseOutcome::Pass);
}

TEST_CASE("grid suites give identical reports serially and in parallel") {
  HarnessOptions serial, two;
  serial.parallel = false;
  two.jobs = 2;
  OnoGridConfig ono;
  ono.alphas = {mpq_class(1, 2), mpq_class(5, 4)};
  ono.n_max = 3;
  ono.d_max = 3;
  CHECK(suite_ono_grid(ono, serial).dump() == suite_ono_grid(ono, two).dump());
  GaussianConfig g;
  g.d_max = 4;
  CHECK(suite_gaussian(g, serial).dump() == suite_gaussian(g, two).dump());
}
