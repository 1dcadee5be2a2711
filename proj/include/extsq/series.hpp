#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "extsq/lfactor.hpp"
#include "extsq/poly1.hpp"
#include "extsq/repring.hpp"

namespace extsq {

/// Truncated bivariate power series: coefficients indexed by (m, n) with
/// m, n >= 0 and m + n <= order. Storage is dense by diagonals, so equality
/// and Cauchy products are exact and never touch indices past the order.
template <class C>
class TruncatedSeries2 {
 public:
  TruncatedSeries2(int order, C zero)
      : order_(order), zero_(std::move(zero)) {
    if (order < 1)
      throw std::invalid_argument("TruncatedSeries2: order must be >= 1");
    c_.assign(cells(order), zero_);
  }

  int order() const { return order_; }
  const C& zero() const { return zero_; }

  const C& coeff(int m, int n) const { return c_[index(m, n)]; }
  void set_coeff(int m, int n, C v) { c_[index(m, n)] = std::move(v); }
  void add_coeff(int m, int n, const C& v) {
    auto i = index(m, n);
    c_[i] = c_[i] + v;
  }

  TruncatedSeries2 operator+(const TruncatedSeries2& o) const {
    check_compat(o);
    TruncatedSeries2 r(order_, zero_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }

  /// Cauchy product, truncated to the common order.
  TruncatedSeries2 operator*(const TruncatedSeries2& o) const {
    check_compat(o);
    TruncatedSeries2 r(order_, zero_);
    for (int m1 = 0; m1 <= order_; ++m1)
      for (int n1 = 0; m1 + n1 <= order_; ++n1) {
        if (coeff(m1, n1) == zero_) continue;
        for (int m2 = 0; m1 + n1 + m2 <= order_; ++m2)
          for (int n2 = 0; m1 + n1 + m2 + n2 <= order_; ++n2) {
            if (o.coeff(m2, n2) == o.zero_) continue;
            r.add_coeff(m1 + m2, n1 + n2, coeff(m1, n1) * o.coeff(m2, n2));
          }
      }
    return r;
  }

  bool operator==(const TruncatedSeries2& o) const {
    check_compat(o);
    return c_ == o.c_;
  }

  /// Lowest-diagonal coefficient where the two series differ.
  std::optional<std::pair<int, int>> first_mismatch(
      const TruncatedSeries2& o) const {
    check_compat(o);
    for (int t = 0; t <= order_; ++t)
      for (int m = 0; m <= t; ++m)
        if (!(coeff(m, t - m) == o.coeff(m, t - m)))
          return std::make_pair(m, t - m);
    return std::nullopt;
  }

 private:
  int order_;
  C zero_;
  std::vector<C> c_;

  static size_t cells(int order) {
    return static_cast<size_t>(order + 1) * static_cast<size_t>(order + 2) / 2;
  }
  size_t index(int m, int n) const {
    if (m < 0 || n < 0 || m + n > order_)
      throw std::out_of_range("TruncatedSeries2: index outside truncation");
    const int t = m + n;
    return static_cast<size_t>(t) * static_cast<size_t>(t + 1) / 2 +
           static_cast<size_t>(m);
  }
  void check_compat(const TruncatedSeries2& o) const {
    if (order_ != o.order_)
      throw std::invalid_argument("TruncatedSeries2: order mismatch");
  }
};

/// Geometric series sum_k X^{ik} Y^{jk}, truncated at the given order.
template <class C>
TruncatedSeries2<C> zeta_series(int i, int j, int order, const C& zero,
                                const C& one) {
  if (i < 0 || j < 0 || (i == 0 && j == 0))
    throw std::invalid_argument("zeta_series: need (i,j) != (0,0), i,j >= 0");
  TruncatedSeries2<C> r(order, zero);
  for (int k = 0; k * (i + j) <= order; ++k) r.set_coeff(i * k, j * k, one);
  return r;
}

// ---------------------------------------------------------------------------
// Local data of the two cases.
// ---------------------------------------------------------------------------

enum class CaseKind { split, inert };

/// Satake data at a split place: four eigenvalues with product 1.
struct SatakeA3 {
  std::array<std::complex<double>, 4> chi;
  explicit SatakeA3(const std::array<std::complex<double>, 4>& c);
};

/// Satake data at an inert place: the rank-2 pair (a, b).
struct SatakeC2 {
  std::complex<double> a, b;
  SatakeC2(std::complex<double> a_, std::complex<double> b_);
};

/// A place of one of the two kinds, optionally carrying a concrete numeric
/// class. The formal (rep-ring) series need only the kind; the numeric
/// operations require the class data.
class CSCase {
 public:
  static CSCase split_formal() { return CSCase(CaseKind::split); }
  static CSCase inert_formal() { return CSCase(CaseKind::inert); }
  static CSCase split_numeric(const SatakeA3& s) {
    CSCase c(CaseKind::split);
    c.a3_ = s;
    return c;
  }
  static CSCase inert_numeric(const SatakeC2& s) {
    CSCase c(CaseKind::inert);
    c.c2_ = s;
    return c;
  }

  CaseKind kind() const { return kind_; }
  RootSystem system() const {
    return kind_ == CaseKind::split ? RootSystem::A3 : RootSystem::C2;
  }
  bool has_numeric() const { return a3_.has_value() || c2_.has_value(); }
  const SatakeA3& a3() const;
  const SatakeC2& c2() const;
  /// Torus eigenvalues fed to trace evaluation (4 split, 2 inert).
  std::vector<std::complex<double>> eigenvalues() const;

 private:
  explicit CSCase(CaseKind k) : kind_(k) {}
  CaseKind kind_;
  std::optional<SatakeA3> a3_;
  std::optional<SatakeC2> c2_;
};

/// Highest weight carrying the (m,n) Whittaker value: V(m,n,m) at split
/// places, W(m,n) (conventional index) at inert ones.
DominantWeight cs_weight(CaseKind kind, int m, int n);

/// Formal normalized Whittaker value: the trace symbol alone; the q-power
/// q^{-3m-2n} is tracked by the caller against the summation variables.
RepRingElement cs_value_formal(CaseKind kind, int m, int n);

/// Numeric normalized Whittaker value q^{-3m-2n} Tr(class | cs_weight).
std::complex<double> cs_value_numeric(const CSCase& c, int q, int m, int n);

// ---------------------------------------------------------------------------
// Rep-ring generating series.
// ---------------------------------------------------------------------------

using RepSeries = TruncatedSeries2<RepRingElement>;

/// coeff(M,K) = sum over m+alpha=M, m+beta=K of the trace symbol at
/// (m, alpha+beta).
RepSeries raw_local_series(CaseKind kind, int order);

/// Split: six-fold enumeration placing [V(a, c+e, a)] at
/// X^{a+b+c+2d} Y^{a+b+e+2f}. Inert: four-fold enumeration placing
/// [W(s, m1+t)] at X^{s+r+m1} Y^{s+r+t}.
RepSeries optimal_form_series(CaseKind kind, int order);

/// coeff(m,n) = [Sym^m(base)] (x) [Sym^n(base)] with base the 6-dim V(0,1,0)
/// (split) resp. the 4-dim W(0,1) (inert); symmetric powers come from the
/// plethysm oracle and products from the rep-ring multiplication.
RepSeries lseries_product(CaseKind kind, int order);

// ---------------------------------------------------------------------------
// Unipotent inner integral (exact in u = q^{z-s} and formal q^{-1}).
// ---------------------------------------------------------------------------

using QinvPoly = Poly1<Rat>;    // polynomials in the formal symbol q^{-1}
using UniPoly = Poly1<QinvPoly>;  // polynomials in u over that ring

/// Term-by-term value of the inner integral:
/// 1 + (1 - q^{-1}) sum_{l=1}^{n} u^l - q^{-1} u^{n+1}.
UniPoly unipotent_inner_sum(int n);

/// (1 - u^{n+1})(1 - q^{-1} u) / (1 - u), carried out by exact polynomial
/// division (the quotient is 1 + u + ... + u^n times the linear factor).
UniPoly unipotent_closed_form(int n);

// ---------------------------------------------------------------------------
// Numeric local integral.
// ---------------------------------------------------------------------------

struct NumericIntegral {
  std::complex<double> value;  // prefactor times the partial double sum
  double tail;                 // bound on the dropped terms via the crude
                               // trace-by-dimension estimate (rigorous for
                               // unit-modulus classes); >= 1 flags a
                               // non-convergent parameter region
};

/// Partial sum over 0 <= m, n <= terms of
///   q^{-m(s+z-3)-n(z-2)} * (q^{-3m-2n} Tr) * (1 - q^{(n+1)(z-s)}),
/// multiplied by the prefactor (1 - q^{-(s-z+1)}) / (1 - q^{-(s-z)}).
NumericIntegral numeric_local_integral(const CSCase& c, int q,
                                       std::complex<double> s,
                                       std::complex<double> z, int terms);

/// Euler-product closed form the integral must equal: L(s)L(z) times
/// (1 - q^{-2s})(1 - q^{-2z})(1 - q^{-(s+z)})(1 - q^{-(s-z+1)}), where L is
/// the degree-6 factor of the case (pairwise products at split places, the
/// 4-dim factor times zeta(2s) at inert ones).
std::complex<double> closed_form_product(const CSCase& c, int q,
                                         std::complex<double> s,
                                         std::complex<double> z);

/// One-time symbolic check that the q-exponents of the display form combine
/// with the q^{-3m-2n} normalization to exactly X^m Y^{m+n}: the
/// m-coefficient -(s+z-3)-3 equals -(s+z) and the n-coefficient -(z-2)-2
/// equals -z, as exact linear forms in (s, z).
bool exponent_bookkeeping_ok();

}  // namespace extsq
