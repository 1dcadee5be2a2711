#include "extsq/series.hpp"

#include <cmath>
#include <stdexcept>

#include "extsq/decomp.hpp"

namespace extsq {

namespace {
using cplx = std::complex<double>;
}

SatakeA3::SatakeA3(const std::array<cplx, 4>& c) : chi(c) {
  cplx prod(1.0);
  for (const auto& x : chi) {
    if (std::abs(x) == 0.0)
      throw std::invalid_argument("SatakeA3: zero eigenvalue");
    prod *= x;
  }
  if (std::abs(prod - 1.0) > 1e-9)
    throw std::invalid_argument(
        "SatakeA3: eigenvalue product must be 1 (trivial central character)");
}

SatakeC2::SatakeC2(cplx a_, cplx b_) : a(a_), b(b_) {
  if (std::abs(a) == 0.0 || std::abs(b) == 0.0)
    throw std::invalid_argument("SatakeC2: zero eigenvalue");
}

const SatakeA3& CSCase::a3() const {
  if (!a3_) throw std::logic_error("CSCase: no split Satake data attached");
  return *a3_;
}

const SatakeC2& CSCase::c2() const {
  if (!c2_) throw std::logic_error("CSCase: no inert Satake data attached");
  return *c2_;
}

std::vector<cplx> CSCase::eigenvalues() const {
  if (kind_ == CaseKind::split) {
    const auto& s = a3();
    return {s.chi[0], s.chi[1], s.chi[2], s.chi[3]};
  }
  const auto& s = c2();
  return {s.a, s.b};
}

DominantWeight cs_weight(CaseKind kind, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("cs_weight: negative index");
  return kind == CaseKind::split ? DominantWeight::a3(m, n, m)
                                 : DominantWeight::c2_conv(m, n);
}

RepRingElement cs_value_formal(CaseKind kind, int m, int n) {
  return RepRingElement::irred(cs_weight(kind, m, n));
}

cplx cs_value_numeric(const CSCase& c, int q, int m, int n) {
  const auto eigs = c.eigenvalues();
  const double scale =
      std::exp(-(3.0 * m + 2.0 * n) * std::log(static_cast<double>(q)));
  return scale * trace_numeric(cs_weight(c.kind(), m, n),
                               std::span<const cplx>(eigs.data(), eigs.size()));
}

RepSeries raw_local_series(CaseKind kind, int order) {
  const RootSystem sys =
      kind == CaseKind::split ? RootSystem::A3 : RootSystem::C2;
  RepSeries s(order, RepRingElement::zero(sys));
  for (int M = 0; M <= order; ++M)
    for (int K = 0; M + K <= order; ++K) {
      RepRingElement c = RepRingElement::zero(sys);
      for (int m = 0; m <= std::min(M, K); ++m)
        c.add_term(cs_weight(kind, m, (M - m) + (K - m)), 1);
      s.set_coeff(M, K, c);
    }
  return s;
}

RepSeries optimal_form_series(CaseKind kind, int order) {
  const int N = order;
  if (kind == CaseKind::split) {
    RepSeries s(N, RepRingElement::zero(RootSystem::A3));
    for (int a = 0; 2 * a <= N; ++a)
      for (int b = 0; 2 * a + 2 * b <= N; ++b)
        for (int c = 0; 2 * a + 2 * b + c <= N; ++c)
          for (int d = 0; 2 * a + 2 * b + c + 2 * d <= N; ++d)
            for (int e = 0; 2 * a + 2 * b + c + 2 * d + e <= N; ++e)
              for (int f = 0; 2 * a + 2 * b + c + 2 * d + e + 2 * f <= N; ++f)
                s.add_coeff(a + b + c + 2 * d, a + b + e + 2 * f,
                            cs_value_formal(kind, a, c + e));
    return s;
  }
  RepSeries s(N, RepRingElement::zero(RootSystem::C2));
  for (int s1 = 0; 2 * s1 <= N; ++s1)
    for (int r = 0; 2 * s1 + 2 * r <= N; ++r)
      for (int m1 = 0; 2 * s1 + 2 * r + m1 <= N; ++m1)
        for (int t = 0; 2 * s1 + 2 * r + m1 + t <= N; ++t)
          s.add_coeff(s1 + r + m1, s1 + r + t,
                      cs_value_formal(kind, s1, m1 + t));
  return s;
}

RepSeries lseries_product(CaseKind kind, int order) {
  const bool split = kind == CaseKind::split;
  const RootSystem sys = split ? RootSystem::A3 : RootSystem::C2;
  const DominantWeight base =
      split ? DominantWeight::a3(0, 1, 0) : DominantWeight::c2_conv(0, 1);

  std::vector<RepRingElement> sym;
  sym.reserve(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    const int cap = std::max(kDefaultCoordCap, k);
    sym.push_back(
        decompose_character(sys, sym_power_character(base, k, cap), cap));
  }

  RepSeries s(order, RepRingElement::zero(sys));
  for (int m = 0; m <= order; ++m)
    for (int n = 0; m + n <= order; ++n)
      s.set_coeff(m, n,
                  sym[static_cast<size_t>(m)] * sym[static_cast<size_t>(n)]);
  return s;
}

namespace {

const QinvPoly kQZero{Rat(0)};

QinvPoly q_one() { return QinvPoly::constant(Rat(0), Rat(1)); }
QinvPoly q_inv() {
  QinvPoly p(Rat(0));
  p.set_coeff(1, Rat(1));
  return p;
}

}  // namespace

UniPoly unipotent_inner_sum(int n) {
  if (n < 0) throw std::invalid_argument("unipotent_inner_sum: n < 0");
  UniPoly f(kQZero);
  f.set_coeff(0, q_one());
  const QinvPoly band = q_one() - q_inv();  // measure of the unit shell
  for (int l = 1; l <= n; ++l) f.set_coeff(l, band);
  f.set_coeff(n + 1, kQZero - q_inv());  // boundary term
  return f;
}

UniPoly unipotent_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("unipotent_closed_form: n < 0");
  UniPoly num(kQZero);  // 1 - u^{n+1}
  num.set_coeff(0, q_one());
  num.set_coeff(n + 1, kQZero - q_one());
  const UniPoly geo = num.divide_by_one_minus_t("unipotent_closed_form");
  UniPoly lin(kQZero);  // 1 - q^{-1} u
  lin.set_coeff(0, q_one());
  lin.set_coeff(1, kQZero - q_inv());
  return geo * lin;
}

namespace {

/// Dimension bound along the diagonal m+n = t: every Weyl-formula factor of
/// the (m,n,m) resp. (m,n) weight is at most 2t+4.
double dim_bound(CaseKind kind, int t) {
  const double base = 2.0 * t + 4.0;
  return kind == CaseKind::split ? std::pow(base, 6) / 12.0
                                 : std::pow(base, 4) / 24.0;
}

}  // namespace

NumericIntegral numeric_local_integral(const CSCase& c, int q, cplx s, cplx z,
                                       int terms) {
  if (!c.has_numeric())
    throw std::invalid_argument(
        "numeric_local_integral: case carries no numeric Satake data");
  if (q < 2) throw std::invalid_argument("numeric_local_integral: q < 2");
  if (terms < 0)
    throw std::invalid_argument("numeric_local_integral: negative term bound");

  const double lnq = std::log(static_cast<double>(q));
  auto qpow = [&](cplx w) { return std::exp(-w * lnq); };  // q^{-w}
  const cplx u = qpow(s - z);                              // q^{z-s}
  const cplx pref_den = 1.0 - qpow(s - z);
  const cplx pref = (1.0 - qpow(s - z + 1.0)) / pref_den;

  cplx sum(0.0);
  for (int m = 0; m <= terms; ++m)
    for (int n = 0; n <= terms; ++n) {
      const cplx measure =
          qpow(static_cast<double>(m) * (s + z - 3.0) +
               static_cast<double>(n) * (z - 2.0));
      const cplx bracket = 1.0 - std::pow(u, n + 1);
      sum += measure * cs_value_numeric(c, q, m, n) * bracket;
    }
  const cplx value = pref * sum;

  // Dropped cells all lie on diagonals t > terms; at most t+1 cells per
  // diagonal, each bounded by dim * r^t * (1+|u|) with r covering both
  // |XY|^m and |Y|^n.
  const double r = std::max(std::abs(qpow(s + z)), std::abs(qpow(z)));
  const double au = std::abs(u);
  double tail = 1e308;
  if (r < 1.0 - 1e-9 && au <= 1.0 + 1e-12 && std::abs(pref_den) > 1e-12) {
    const double pdeg = c.kind() == CaseKind::split ? 6.0 : 4.0;
    const double c0 = (1.0 + au) * std::abs(pref);
    double acc = 0.0;
    double rt = std::pow(r, terms + 1);
    bool bounded = false;
    for (int t = terms + 1; t < 200000; ++t) {
      const double f = c0 * (t + 1.0) * dim_bound(c.kind(), t) * rt;
      acc += f;
      const double ratio = r * ((t + 2.0) / (t + 1.0)) *
                           std::pow((2.0 * t + 6.0) / (2.0 * t + 4.0), pdeg);
      if (ratio < 0.999) {
        acc += f * ratio / (1.0 - ratio);
        bounded = true;
        break;
      }
      rt *= r;
    }
    if (bounded) tail = acc;
  }
  return {value, tail};
}

cplx closed_form_product(const CSCase& c, int q, cplx s, cplx z) {
  if (!c.has_numeric())
    throw std::invalid_argument(
        "closed_form_product: case carries no numeric Satake data");
  const double lnq = std::log(static_cast<double>(q));
  auto qpow = [&](cplx w) { return std::exp(-w * lnq); };
  const cplx X = qpow(s), Y = qpow(z);

  auto lfactor_value = [&](cplx T) -> cplx {
    if (c.kind() == CaseKind::split) {
      const auto eigs = wedge2_eigenvalues(c.a3().chi);
      const auto f =
          euler_factor_numeric(std::span<const cplx>(eigs.data(), 6));
      return 1.0 / factor_eval(f, T);
    }
    const auto f = wedge2_factor_inert_via_spin_numeric(c.c2().a, c.c2().b);
    return 1.0 / factor_eval(f, T);
  };

  return lfactor_value(X) * lfactor_value(Y) * (1.0 - X * X) * (1.0 - Y * Y) *
         (1.0 - X * Y) * (1.0 - qpow(s - z + 1.0));
}

namespace {

/// Exact linear form c_s * s + c_z * z + c_1 over the rationals.
struct LinForm {
  Rat s, z, c;
  LinForm operator+(const LinForm& o) const {
    return {s + o.s, z + o.z, c + o.c};
  }
  bool operator==(const LinForm& o) const {
    return s == o.s && z == o.z && c == o.c;
  }
};

}  // namespace

bool exponent_bookkeeping_ok() {
  // Per unit of m: the display factor contributes -(s+z-3), the Whittaker
  // normalization -3; together -(s+z), i.e. one power of XY.
  const LinForm disp_m{Rat(-1), Rat(-1), Rat(3)};
  const LinForm norm_m{Rat(0), Rat(0), Rat(-3)};
  const LinForm want_m{Rat(-1), Rat(-1), Rat(0)};
  // Per unit of n: -(z-2) from the display, -2 from the normalization;
  // together -z, i.e. one power of Y.
  const LinForm disp_n{Rat(0), Rat(-1), Rat(2)};
  const LinForm norm_n{Rat(0), Rat(0), Rat(-2)};
  const LinForm want_n{Rat(0), Rat(-1), Rat(0)};
  return disp_m + norm_m == want_m && disp_n + norm_n == want_n;
}

}  // namespace extsq
