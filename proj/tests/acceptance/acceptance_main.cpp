// Acceptance gate: one line per criterion, exit 0 iff all pass.
//
// Everything here is pinned: truncation orders 8 (split) and 10 (inert),
// lemma bounds 5/5/8/3, the unipotent range 0..20, the character sweep box
// with coordinates <= 4, and the numeric run with 10 seeded samples per case
// at q = 3, (s, z) = (3, 2), 60 diagonals, relative tolerance 1e-6.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "extsq/chars.hpp"
#include "extsq/decomp.hpp"
#include "extsq/lfactor.hpp"
#include "extsq/series.hpp"
#include "extsq/verify.hpp"

using namespace extsq;
using cplx = std::complex<double>;

namespace {

int g_failures = 0;

template <typename F>
void criterion(int num, const char* text, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  const double sec = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  if (!ok) ++g_failures;
  std::printf("%s  %d/9  %s  [%.1fs]%s%s\n", ok ? "PASS" : "FAIL", num, text,
              sec, note.empty() ? "" : "  -- ", note.c_str());
  std::fflush(stdout);
}

RepSeries rep_zeta(RootSystem sys, int i, int j, int order) {
  return zeta_series(i, j, order, RepRingElement::zero(sys),
                     RepRingElement::one(sys));
}

}  // namespace

int main() {
  criterion(1, "split main identity at order 8: reindexed form == product of "
               "symmetric-power series",
            [](std::string&) {
              return optimal_form_series(CaseKind::split, 8) ==
                     lseries_product(CaseKind::split, 8);
            });

  criterion(2, "split chain at order 8: raw sum times the three geometric "
               "series == reindexed form",
            [](std::string&) {
              const RepSeries chain =
                  raw_local_series(CaseKind::split, 8) *
                  rep_zeta(RootSystem::A3, 1, 1, 8) *
                  rep_zeta(RootSystem::A3, 2, 0, 8) *
                  rep_zeta(RootSystem::A3, 0, 2, 8);
              return chain == optimal_form_series(CaseKind::split, 8);
            });

  criterion(3, "inert main identity at order 10: raw sum times the XY "
               "geometric series == product of symmetric-power series",
            [](std::string&) {
              const RepSeries chain = raw_local_series(CaseKind::inert, 10) *
                                      rep_zeta(RootSystem::C2, 1, 1, 10);
              return chain == lseries_product(CaseKind::inert, 10);
            });

  criterion(4, "unipotent inner sum equals its closed form for 0 <= n <= 20",
            [](std::string&) {
              for (int n = 0; n <= 20; ++n)
                if (!(unipotent_inner_sum(n) == unipotent_closed_form(n)))
                  return false;
              return true;
            });

  criterion(5, "decomposition lemmas match their oracles (tensor n,m <= 5; "
               "sym k <= 8; branching coords <= 3), exactly",
            [](std::string& note) {
              for (int n = 0; n <= 5; ++n)
                for (int m = 0; m <= 5; ++m) {
                  if (!(tensor_formula_split(n, m) ==
                        lr_tensor(DominantWeight::a3(0, n, 0),
                                  DominantWeight::a3(0, m, 0)))) {
                    note = "split tensor (" + std::to_string(n) + "," +
                           std::to_string(m) + ")";
                    return false;
                  }
                  const TorusPoly prod =
                      character_freudenthal(DominantWeight::c2_conv(0, n)) *
                      character_freudenthal(DominantWeight::c2_conv(0, m));
                  if (!(tensor_formula_inert(n, m) ==
                        decompose_character(RootSystem::C2, prod))) {
                    note = "inert tensor (" + std::to_string(n) + "," +
                           std::to_string(m) + ")";
                    return false;
                  }
                }
              for (int k = 0; k <= 8; ++k) {
                const int cap = std::max(kDefaultCoordCap, k);
                if (!(sym_wedge2_split(k) ==
                      decompose_character(
                          RootSystem::A3,
                          sym_power_character(DominantWeight::a3(0, 1, 0), k,
                                              cap),
                          cap))) {
                  note = "sym k=" + std::to_string(k);
                  return false;
                }
              }
              for (int u = 0; u <= 3; ++u)
                for (int v = 0; v <= 3; ++v)
                  for (int w = 0; w <= 3; ++w)
                    if (!(branch_a3_to_c2(u, v, w) ==
                          decompose_character(
                              RootSystem::C2,
                              restrict_a3_to_c2(character_freudenthal(
                                  DominantWeight::a3(u, v, w)))))) {
                      note = "branching (" + std::to_string(u) + "," +
                             std::to_string(v) + "," + std::to_string(w) + ")";
                      return false;
                    }
              return true;
            });

  criterion(6, "factor identities: restricted split factor == 5-dim factor "
               "times (1-T); both inert constructions check out, degree 6, "
               "constant term 1",
            [](std::string&) {
              std::vector<std::pair<TorusWeight, int>> ws;
              for (const auto& w : c2_std5_weights()) ws.emplace_back(w, 1);
              ExactFactor std5 = factor_from_weights(RootSystem::C2, ws);
              ExactFactor omt{TorusPoly(RootSystem::C2)};
              omt.set_coeff(0, TorusPoly::one(RootSystem::C2));
              omt.set_coeff(1, TorusPoly::one(RootSystem::C2) * Int(-1));
              ExactFactor omt2{TorusPoly(RootSystem::C2)};
              omt2.set_coeff(0, TorusPoly::one(RootSystem::C2));
              omt2.set_coeff(2, TorusPoly::one(RootSystem::C2) * Int(-1));
              if (!(wedge2_restricted_factor_exact() == std5 * omt))
                return false;
              const ExactFactor vs = wedge2_factor_inert_via_spin_exact();
              const ExactFactor vd = wedge2_factor_inert_via_std_exact();
              return vs == spin_factor_exact() * omt2 && vs.degree() == 6 &&
                     constant_term_is_one(vs) &&
                     vd == std_twisted_factor_exact(-1) * omt &&
                     vd.degree() == 6 && constant_term_is_one(vd);
            });

  criterion(7, "numeric end-to-end: 10 seeded samples per case at q=3, "
               "(s,z)=(3,2), 60 diagonals, relative error <= 1e-6",
            [](std::string& note) {
              double maxrel = 0.0;
              for (const auto& s : sample_satake_split(1, 10)) {
                const auto c = CSCase::split_numeric(s);
                const auto I = numeric_local_integral(c, 3, 3.0, 2.0, 60);
                const cplx want = closed_form_product(c, 3, 3.0, 2.0);
                maxrel = std::max(maxrel,
                                  std::abs(I.value - want) / std::abs(want));
              }
              for (const auto& s : sample_satake_inert(1, 10)) {
                const auto c = CSCase::inert_numeric(s);
                const auto I = numeric_local_integral(c, 3, 3.0, 2.0, 60);
                const cplx want = closed_form_product(c, 3, 3.0, 2.0);
                maxrel = std::max(maxrel,
                                  std::abs(I.value - want) / std::abs(want));
              }
              char b[64];
              std::snprintf(b, sizeof b, "max rel err %.3e", maxrel);
              note = b;
              return maxrel <= 1e-6;
            });

  criterion(8, "character cross-check: recursive == alternant construction "
               "and mass == dimension on the full sweep box (coords <= 4)",
            [](std::string& note) {
              VerifyConfig cfg;
              cfg.char_bound = 4;
              const auto rep = run_suite(cfg, "all");
              for (const auto& c : rep.checks) {
                if (c.id != "chars/dimension" &&
                    c.id != "chars/freudenthal-vs-alternant")
                  continue;
                if (!c.pass) {
                  note = c.id + ": " + c.witness;
                  return false;
                }
              }
              return true;
            });

  criterion(9, "report determinism: two full suite runs with the same seed "
               "produce byte-identical JSON",
            [](std::string&) {
              const VerifyConfig cfg;
              const auto r1 = run_suite(cfg, "all");
              const auto r2 = run_suite(cfg, "all");
              return r1.all_pass && report_to_json(r1) == report_to_json(r2);
            });

  if (g_failures == 0) {
    std::printf("ACCEPTANCE: all 9 criteria pass\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) failing\n", g_failures);
  return 1;
}
