#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "extsq/verify.hpp"

using namespace extsq;
using cplx = std::complex<double>;

namespace {

/// Shrunk configuration that still covers every fault-injection point.
VerifyConfig fast_config() {
  VerifyConfig cfg;
  cfg.split_order = 4;
  cfg.inert_order = 4;
  cfg.lemma_bound = 2;
  cfg.sym_bound = 3;
  cfg.branch_bound = 1;
  cfg.unipotent_bound = 5;
  cfg.char_bound = 2;
  cfg.samples = 2;
  cfg.numeric_terms = 40;
  return cfg;
}

}  // namespace

TEST_CASE("the default suite passes and reports every check once") {
  const auto rep = run_suite(VerifyConfig{}, "all");
  CHECK(rep.all_pass);
  CHECK(rep.checks.size() == 20);
  for (size_t i = 1; i < rep.checks.size(); ++i)
    CHECK(rep.checks[i - 1].id < rep.checks[i].id);
  for (const auto& c : rep.checks) {
    CHECK(c.pass);
    CHECK(!c.statement.empty());
  }
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
  const auto cfg = fast_config();
  CHECK(report_to_json(run_suite(cfg, "all")) ==
        report_to_json(run_suite(cfg, "all")));
}

TEST_CASE("group filters select subsets and unknown groups are rejected") {
  const auto cfg = fast_config();
  const auto uni = run_suite(cfg, "unipotent");
  REQUIRE(uni.checks.size() == 1);
  CHECK(uni.checks[0].id == "unipotent/closed-form");
  const auto fac = run_suite(cfg, "factors");
  CHECK(fac.checks.size() == 4);
  for (const auto& c : fac.checks)
    CHECK(std::find(c.groups.begin(), c.groups.end(), "factors") !=
          c.groups.end());
  CHECK_THROWS_AS(run_suite(cfg, "bogus"), std::invalid_argument);
}

TEST_CASE("each fault injection fails exactly its own check") {
  const std::vector<std::string> ids = {
      "chars/dimension",
      "chars/freudenthal-vs-alternant",
      "chars/weyl-invariance",
      "lemma/tensor-split",
      "lemma/tensor-inert",
      "lemma/sym-wedge2-split",
      "lemma/sym-spin",
      "lemma/branching",
      "factor/wedge2-restriction",
      "factor/inert-via-spin",
      "factor/inert-via-std",
      "factor/char-consistency",
      "unipotent/closed-form",
      "series/split-chain",
      "series/split-main",
      "series/inert-main",
      "numeric/split-endtoend",
      "numeric/inert-endtoend",
      "numeric/exponent-bookkeeping",
      "numeric/closure",
  };
  for (const auto& id : ids) {
    VerifyConfig cfg = fast_config();
    cfg.perturb = id;
    const auto rep = run_suite(cfg, "all");
    CHECK(!rep.all_pass);
    int nfail = 0;
    std::string fid;
    for (const auto& c : rep.checks)
      if (!c.pass) {
        ++nfail;
        fid = c.id;
      }
    CHECK(nfail == 1);
    CHECK(fid == id);
    if (nfail != 1 || fid != id)
      MESSAGE("fault injection not isolated for ", id);
  }
}

TEST_CASE("report JSON carries the schema and echoes the configuration") {
  VerifyConfig cfg = fast_config();
  cfg.seed = 77;
  const auto doc = nlohmann::json::parse(report_to_json(run_suite(cfg, "unipotent")));
  CHECK(doc["version"] == kVersion);
  CHECK(doc["group"] == "unipotent");
  CHECK(doc["all_pass"] == true);
  CHECK(doc["config"]["seed"] == 77);
  CHECK(doc["config"]["split_order"] == 4);
  CHECK(doc["checks"].size() == 1);
  const auto& c = doc["checks"][0];
  CHECK(c["id"] == "unipotent/closed-form");
  CHECK(c["status"] == "pass");
  CHECK(c.contains("witness"));
  CHECK(!c.contains("runtime_ms"));  // only present with timings enabled

  cfg.timings = true;
  const auto timed = nlohmann::json::parse(report_to_json(run_suite(cfg, "unipotent")));
  CHECK(timed["checks"][0].contains("runtime_ms"));
}

TEST_CASE("config files parse, override, and report typed errors") {
  const std::string path = "extsq_test_config.tmp";
  {
    std::ofstream f(path);
    f << "# comment line\n"
      << "samples = 4\n"
      << "tol = 1e-4   # trailing comment\n"
      << "seed = 99\n"
      << "timings = true\n";
  }
  VerifyConfig cfg;
  std::string err;
  REQUIRE(load_config_file(path, cfg, err));
  CHECK(cfg.samples == 4);
  CHECK(cfg.tol == doctest::Approx(1e-4));
  CHECK(cfg.seed == 99);
  CHECK(cfg.timings);

  {
    std::ofstream f(path);
    f << "samples = 4\nwhat = 1\n";
  }
  CHECK(!load_config_file(path, cfg, err));
  CHECK(err.find(":2:") != std::string::npos);
  CHECK(err.find("what") != std::string::npos);

  {
    std::ofstream f(path);
    f << "tol = banana\n";
  }
  CHECK(!load_config_file(path, cfg, err));
  CHECK(err.find(":1:") != std::string::npos);

  std::remove(path.c_str());
  CHECK(!load_config_file("no_such_file_here.cfg", cfg, err));
}

TEST_CASE("config validation rejects unusable values") {
  VerifyConfig cfg;
  cfg.tol = -1.0;
  CHECK_THROWS_AS(run_suite(cfg, "unipotent"), std::invalid_argument);
  cfg = VerifyConfig{};
  cfg.q = 1;
  CHECK_THROWS_AS(run_suite(cfg, "unipotent"), std::invalid_argument);
  cfg = VerifyConfig{};
  cfg.split_order = 0;
  CHECK_THROWS_AS(run_suite(cfg, "unipotent"), std::invalid_argument);
}

TEST_CASE("sampled split classes are deterministic, normalized, regular") {
  const auto a = sample_satake_split(123, 6);
  const auto b = sample_satake_split(123, 6);
  REQUIRE(a.size() == 6);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].chi == b[i].chi);
  const double min_gap = 2.0 * std::sin(std::acos(-1.0) / 64.0);  // 1/64 turn
  for (const auto& c : a) {
    cplx prod = 1.0;
    for (const auto& x : c.chi) {
      CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
      prod *= x;
    }
    CHECK(std::abs(prod - 1.0) < 1e-12);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(std::abs(c.chi[static_cast<size_t>(i)] -
                       c.chi[static_cast<size_t>(j)]) > 0.99 * min_gap);
  }
  // different seeds decorrelate
  CHECK(sample_satake_split(124, 1)[0].chi != a[0].chi);
}

TEST_CASE("sampled inert classes stay away from the walls") {
  const auto cls = sample_satake_inert(123, 6);
  for (const auto& c : cls) {
    CHECK(std::abs(std::abs(c.a) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(c.b) - 1.0) < 1e-12);
    CHECK(std::abs(c.a * c.a - 1.0) > 0.009);
    CHECK(std::abs(c.b * c.b - 1.0) > 0.009);
    CHECK(std::abs(c.a * c.b - 1.0) > 0.09);
    CHECK(std::abs(c.a / c.b - 1.0) > 0.09);
  }
}

TEST_CASE("samplers reject bad counts") {
  CHECK_THROWS_AS(sample_satake_split(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_satake_inert(1, -3), std::invalid_argument);
}
