#include "doctest.h"

#include <algorithm>
#include <complex>
#include <vector>

#include "extsq/chars.hpp"
#include "extsq/lfactor.hpp"
#include "extsq/verify.hpp"

using namespace extsq;
using cplx = std::complex<double>;

namespace {

bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("pairwise-product eigenvalues multiply to one on unit classes") {
  const auto cls = sample_satake_split(3, 2);
  for (const auto& c : cls) {
    const auto e6 = wedge2_eigenvalues(c.chi);
    cplx prod = 1.0;
    for (const auto& e : e6) prod *= e;
    CHECK(close(prod, 1.0, 1e-9));
  }
}

TEST_CASE("inverse polynomial from identity eigenvalues is a pure binomial") {
  const std::array<cplx, 4> ones{1.0, 1.0, 1.0, 1.0};
  const auto c = euler_factor_numeric(
      std::span<const cplx>(wedge2_eigenvalues(ones).data(), 6));
  const std::vector<double> want{1, -6, 15, -20, 15, -6, 1};
  REQUIRE(c.size() == 7);
  for (size_t i = 0; i < 7; ++i) CHECK(close(c[i], want[i]));
}

TEST_CASE("rank-2 eigenvalue lists") {
  const cplx a(0.6, 0.8), b(0.28, 0.96);
  const auto sp = spin_eigenvalues(a, b);
  CHECK(close(sp[0] * sp[3], 1.0));
  CHECK(close(sp[1] * sp[2], 1.0));
  const auto st = std5_eigenvalues(a, b);
  // {ab, a/b, 1, b/a, 1/(ab)} in some fixed order; check as a multiset
  std::vector<cplx> got(st.begin(), st.end());
  const std::vector<cplx> want{a * b, a / b, cplx(1.0), b / a, 1.0 / (a * b)};
  for (const cplx& w : want) {
    const auto it = std::find_if(got.begin(), got.end(),
                                 [&](cplx g) { return close(g, w, 1e-9); });
    REQUIRE(it != got.end());
    got.erase(it);
  }
  CHECK(got.empty());
}

TEST_CASE("split factor: symbolic coefficients through degree 6") {
  const ExactFactor f = wedge2_factor_split_exact();
  CHECK(f.degree() == 6);
  CHECK(constant_term_is_one(f));
  // degree-1 coefficient is minus the full character of V(0,1,0)
  TorusPoly sum(RootSystem::A3);
  for (const auto& w : a3_wedge2_weights()) sum.add_term(w, 1);
  CHECK(f.coeff(1) == sum * Int(-1));
  CHECK(sum == character_freudenthal(DominantWeight::a3(0, 1, 0)));
}

TEST_CASE("restricting the split factor gives the 5-dim factor times 1 - T") {
  std::vector<std::pair<TorusWeight, int>> ws;
  for (const auto& w : c2_std5_weights()) ws.emplace_back(w, 1);
  ExactFactor std5 = factor_from_weights(RootSystem::C2, ws);
  ExactFactor omt{TorusPoly(RootSystem::C2)};
  omt.set_coeff(0, TorusPoly::one(RootSystem::C2));
  omt.set_coeff(1, TorusPoly::one(RootSystem::C2) * Int(-1));
  CHECK(wedge2_restricted_factor_exact() == std5 * omt);
}

TEST_CASE("the two inert constructions satisfy their defining relations") {
  ExactFactor omt{TorusPoly(RootSystem::C2)}, omt2{TorusPoly(RootSystem::C2)};
  omt.set_coeff(0, TorusPoly::one(RootSystem::C2));
  omt.set_coeff(1, TorusPoly::one(RootSystem::C2) * Int(-1));
  omt2.set_coeff(0, TorusPoly::one(RootSystem::C2));
  omt2.set_coeff(2, TorusPoly::one(RootSystem::C2) * Int(-1));

  const ExactFactor via_spin = wedge2_factor_inert_via_spin_exact();
  CHECK(via_spin == spin_factor_exact() * omt2);
  CHECK(via_spin.degree() == 6);
  CHECK(constant_term_is_one(via_spin));

  const ExactFactor via_std = wedge2_factor_inert_via_std_exact();
  CHECK(via_std == std_twisted_factor_exact(-1) * omt);
  CHECK(via_std.degree() == 6);
  CHECK(constant_term_is_one(via_std));
}

TEST_CASE("numeric inert factors match the exact ones at sampled classes") {
  const auto cls = sample_satake_inert(5, 2);
  for (const auto& c : cls) {
    const std::array<cplx, 2> ab{c.a, c.b};
    const std::span<const cplx> eigs(ab.data(), 2);
    const auto ns = wedge2_factor_inert_via_spin_numeric(c.a, c.b);
    const auto nd = wedge2_factor_inert_via_std_numeric(c.a, c.b);
    const ExactFactor es = wedge2_factor_inert_via_spin_exact();
    const ExactFactor ed = wedge2_factor_inert_via_std_exact();
    REQUIRE(static_cast<int>(ns.size()) == es.degree() + 1);
    REQUIRE(static_cast<int>(nd.size()) == ed.degree() + 1);
    for (int k = 0; k <= 6; ++k) {
      CHECK(close(ns[static_cast<size_t>(k)], es.coeff(k).eval(eigs), 1e-9));
      CHECK(close(nd[static_cast<size_t>(k)], ed.coeff(k).eval(eigs), 1e-9));
    }
  }
}

TEST_CASE("factor evaluation is plain polynomial evaluation") {
  const NumericFactor f{cplx(1.0), cplx(-1.0)};
  CHECK(close(factor_eval(f, cplx(0.5)), cplx(0.5)));
  const NumericFactor g{cplx(2.0), cplx(0.0), cplx(3.0)};
  CHECK(close(factor_eval(g, cplx(2.0)), cplx(14.0)));
}

TEST_CASE("weight-list factors validate signs") {
  CHECK_THROWS_AS(
      factor_from_weights(RootSystem::C2, {{TorusWeight::c2(0, 0), 2}}),
      std::invalid_argument);
}
