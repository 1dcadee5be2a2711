#include "doctest.h"

#include <complex>

#include "extsq/rng.hpp"
#include "extsq/series.hpp"
#include "extsq/verify.hpp"

using namespace extsq;
using cplx = std::complex<double>;

namespace {

RepSeries random_sparse(RootSystem sys, int order, std::uint64_t seed) {
  Xoshiro256ss g(seed);
  RepSeries s(order, RepRingElement::zero(sys));
  for (int t = 0; t <= order; ++t)
    for (int m = 0; m <= t; ++m) {
      if (g.next() % 3 != 0) continue;
      const int a = static_cast<int>(g.next() % 3);
      const int b = static_cast<int>(g.next() % 3);
      const auto w = sys == RootSystem::A3 ? DominantWeight::a3(a, b, 0)
                                           : DominantWeight::c2_internal(a, b);
      s.add_coeff(m, t - m, RepRingElement::irred(w) *
                                Int(static_cast<int>(g.next() % 5) - 2));
    }
  return s;
}

}  // namespace

TEST_CASE("truncated series shape and access guards") {
  CHECK_THROWS_AS(RepSeries(0, RepRingElement::zero(RootSystem::A3)),
                  std::invalid_argument);
  RepSeries s(3, RepRingElement::zero(RootSystem::A3));
  CHECK_THROWS_AS(s.coeff(2, 2), std::out_of_range);
  CHECK_THROWS_AS(s.coeff(-1, 0), std::out_of_range);
  s.set_coeff(1, 2, RepRingElement::one(RootSystem::A3));
  CHECK(s.coeff(1, 2) == RepRingElement::one(RootSystem::A3));
}

TEST_CASE("series with different orders refuse to combine") {
  const RepSeries a(3, RepRingElement::zero(RootSystem::A3));
  const RepSeries b(4, RepRingElement::zero(RootSystem::A3));
  CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
  CHECK_THROWS_AS((void)(a == b), std::invalid_argument);
}

TEST_CASE("geometric series invert their defining binomials") {
  const auto zero = RepRingElement::zero(RootSystem::C2);
  const auto one = RepRingElement::one(RootSystem::C2);
  const int N = 6;
  const RepSeries zeta = zeta_series(1, 1, N, zero, one);
  RepSeries binom(N, zero);
  binom.set_coeff(0, 0, one);
  binom.set_coeff(1, 1, zero - one);
  RepSeries unit(N, zero);
  unit.set_coeff(0, 0, one);
  CHECK(zeta * binom == unit);
  CHECK_THROWS_AS(zeta_series(0, 0, N, zero, one), std::invalid_argument);
}

TEST_CASE("series multiplication is commutative, associative, distributive") {
  const int N = 4;
  const auto A = random_sparse(RootSystem::C2, N, 11);
  const auto B = random_sparse(RootSystem::C2, N, 22);
  const auto C = random_sparse(RootSystem::C2, N, 33);
  CHECK(A * B == B * A);
  CHECK((A * B) * C == A * (B * C));
  CHECK((A + B) * C == A * C + B * C);
}

TEST_CASE("first mismatch scans by total degree") {
  const int N = 4;
  auto A = random_sparse(RootSystem::A3, N, 7);
  auto B = A;
  CHECK(!A.first_mismatch(B));
  B.add_coeff(2, 1, RepRingElement::one(RootSystem::A3));
  B.add_coeff(0, 2, RepRingElement::one(RootSystem::A3));
  const auto mm = A.first_mismatch(B);
  REQUIRE(mm.has_value());
  CHECK(*mm == std::pair<int, int>{0, 2});
}

TEST_CASE("raw series coefficients list the expected summands") {
  const RepSeries raw = raw_local_series(CaseKind::split, 4);
  auto one_term = [](DominantWeight w) { return RepRingElement::irred(w); };
  CHECK(raw.coeff(0, 0) == RepRingElement::one(RootSystem::A3));
  CHECK(raw.coeff(1, 0) == one_term(DominantWeight::a3(0, 1, 0)));
  CHECK(raw.coeff(0, 2) == one_term(DominantWeight::a3(0, 2, 0)));
  CHECK(raw.coeff(1, 1) == one_term(DominantWeight::a3(1, 0, 1)) +
                               one_term(DominantWeight::a3(0, 2, 0)));

  const RepSeries rawi = raw_local_series(CaseKind::inert, 4);
  CHECK(rawi.coeff(1, 1) == one_term(DominantWeight::c2_conv(0, 2)) +
                                one_term(DominantWeight::c2_conv(1, 0)));
}

TEST_CASE("reindexed split form adds exactly the trivial at (1,1)") {
  const RepSeries opt = optimal_form_series(CaseKind::split, 3);
  const RepSeries raw = raw_local_series(CaseKind::split, 3);
  CHECK(opt.coeff(1, 1) ==
        raw.coeff(1, 1) + RepRingElement::one(RootSystem::A3));
}

TEST_CASE("symmetric-power product series starts as expected") {
  const RepSeries lp = lseries_product(CaseKind::split, 3);
  CHECK(lp.coeff(0, 0) == RepRingElement::one(RootSystem::A3));
  CHECK(lp.coeff(1, 0) == RepRingElement::irred(DominantWeight::a3(0, 1, 0)));
  CHECK(lp.coeff(1, 1) == optimal_form_series(CaseKind::split, 3).coeff(1, 1));
}

TEST_CASE("unipotent sums at tiny n") {
  // n = 0: 1 - u/q;  n = 1: 1 + (1 - 1/q) u - u^2/q
  const QinvPoly qz = QinvPoly::constant(Rat(0), Rat(0));
  const UniPoly s0 = unipotent_inner_sum(0);
  CHECK(s0.degree() == 1);
  CHECK(s0.coeff(0) == QinvPoly::constant(Rat(0), Rat(1)));
  CHECK(s0.coeff(1) == QinvPoly::linear(Rat(0), Rat(0), Rat(-1)));
  const UniPoly s1 = unipotent_inner_sum(1);
  CHECK(s1.coeff(1) == QinvPoly::linear(Rat(0), Rat(1), Rat(-1)));
  CHECK(s1.coeff(2) == QinvPoly::linear(Rat(0), Rat(0), Rat(-1)));
  for (int n : {0, 1, 2})
    CHECK(unipotent_inner_sum(n) == unipotent_closed_form(n));
  CHECK_THROWS_AS(unipotent_inner_sum(-1), std::invalid_argument);
}

TEST_CASE("weights carrying the normalized values") {
  CHECK(cs_weight(CaseKind::split, 2, 3) == DominantWeight::a3(2, 3, 2));
  CHECK(cs_weight(CaseKind::inert, 2, 3) == DominantWeight::c2_conv(2, 3));
}

TEST_CASE("satake validation") {
  CHECK_THROWS_AS(SatakeA3({cplx(1.0), cplx(1.0), cplx(1.0), cplx(2.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SatakeC2(cplx(0.0), cplx(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(CSCase::split_formal().a3(), std::logic_error);
}

TEST_CASE("normalized numeric values at the identity class") {
  const SatakeA3 id({cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)});
  const CSCase c = CSCase::split_numeric(id);
  // q^{-3m-2n} dim V(m,n,m): m=n=1 gives 3^-5 * 64
  CHECK(std::abs(cs_value_numeric(c, 3, 1, 1) - 64.0 / 243.0) < 1e-12);
}

TEST_CASE("display form of the truncated integral at order zero") {
  const SatakeA3 id({cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)});
  const auto I =
      numeric_local_integral(CSCase::split_numeric(id), 3, 3.0, 2.0, 0);
  // only (m,n) = (0,0) survives: prefactor * (1 - u) = 4/3 * 2/3 = 8/9
  CHECK(std::abs(I.value - 8.0 / 9.0) < 1e-15);
  // the bound on everything dropped is huge at order 0, but finite
  CHECK(std::isfinite(I.tail));
  CHECK(I.tail < 1e308);
}

TEST_CASE("non-convergent parameters are flagged through the tail") {
  const SatakeA3 id({cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)});
  const auto I =
      numeric_local_integral(CSCase::split_numeric(id), 3, 0.0, 0.0, 5);
  CHECK(I.tail >= 1.0);
}

TEST_CASE("truncated integral agrees with the closed form at sampled classes") {
  const auto c = CSCase::split_numeric(sample_satake_split(42, 1)[0]);
  const auto I = numeric_local_integral(c, 3, 3.0, 2.0, 60);
  const cplx want = closed_form_product(c, 3, 3.0, 2.0);
  CHECK(std::abs(I.value - want) / std::abs(want) < 1e-9);

  const auto ci = CSCase::inert_numeric(sample_satake_inert(42, 1)[0]);
  const auto Ii = numeric_local_integral(ci, 3, 3.0, 2.0, 60);
  const cplx wanti = closed_form_product(ci, 3, 3.0, 2.0);
  CHECK(std::abs(Ii.value - wanti) / std::abs(wanti) < 1e-9);
}

TEST_CASE("exponent bookkeeping holds as exact linear forms") {
  CHECK(exponent_bookkeeping_ok());
}
