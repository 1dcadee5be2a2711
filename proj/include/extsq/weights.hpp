#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "extsq/bigint.hpp"

namespace extsq {

/// The two root systems in play: A3 for SL4(C) and C2 for Sp4(C) ~ Spin5(C).
enum class RootSystem : std::uint8_t { A3, C2 };

constexpr int rank(RootSystem s) { return s == RootSystem::A3 ? 3 : 2; }
constexpr int torus_dim(RootSystem s) { return s == RootSystem::A3 ? 4 : 2; }
constexpr int weyl_order(RootSystem s) { return s == RootSystem::A3 ? 24 : 8; }

const char* to_string(RootSystem s);

/// Integer exponent vector on the maximal torus.
///
/// A3 weights are exponents of (x1,x2,x3,x4) modulo x1*x2*x3*x4 = 1; the
/// stored representative always has minimum entry 0, so two weights are equal
/// in the quotient iff their stored vectors are equal. C2 weights are plain
/// exponents of (a,b). The type is an additive group in both cases.
class TorusWeight {
 public:
  TorusWeight() : sys_(RootSystem::C2), e_{0, 0, 0, 0} {}

  static TorusWeight a3(int e1, int e2, int e3, int e4);
  static TorusWeight c2(int e1, int e2);
  /// From a raw exponent vector of length torus_dim(sys).
  static TorusWeight from_raw(RootSystem sys, const std::array<int, 4>& raw);

  RootSystem system() const { return sys_; }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }

  TorusWeight operator+(const TorusWeight& o) const;
  TorusWeight operator-(const TorusWeight& o) const;
  TorusWeight operator-() const;
  /// Exponent scaling, i.e. the weight of the k-th Adams operation.
  TorusWeight scaled(int k) const;

  bool operator==(const TorusWeight& o) const {
    return sys_ == o.sys_ && e_ == o.e_;
  }
  bool operator<(const TorusWeight& o) const {
    if (sys_ != o.sys_) return sys_ < o.sys_;
    return e_ < o.e_;
  }

  bool is_zero() const;
  /// Weakly decreasing (A3) resp. e1 >= e2 >= 0 (C2).
  bool is_dominant() const;

  /// All distinct images under the Weyl group (S4 permutations for A3,
  /// signed permutations for C2). Size divides the Weyl group order.
  std::vector<TorusWeight> weyl_orbit() const;

  /// Monomial string such as "x1^2*x3" or "a*b^-1"; "1" for the zero weight.
  std::string str() const;

 private:
  RootSystem sys_;
  std::array<int, 4> e_;
  void canonicalize();
};

/// Highest weight in the fundamental-weight basis.
///
/// A3 coordinates (a,b,c) follow the standard/ext-square/ext-cube order.
/// C2 stores (spin4, std5) internally; the conventional external indexing
/// W_(m,n) = m*(5-dim fundamental) + n*(4-dim fundamental) is converted
/// exactly once, in c2_conv()/c2_conv_index().
class DominantWeight {
 public:
  static DominantWeight a3(int a, int b, int c);
  static DominantWeight c2_internal(int spin4, int std5);
  /// Conventional C2 indexing: W_(m,n) with m counting the 5-dim fundamental
  /// and n the 4-dim (spin) fundamental.
  static DominantWeight c2_conv(int m, int n) { return c2_internal(n, m); }

  RootSystem system() const { return sys_; }
  const std::array<int, 3>& coords() const { return c_; }
  /// (m,n) in the conventional C2 order described at c2_conv().
  std::pair<int, int> c2_conv_index() const;

  /// Partition representative of the highest weight: length-4 raw exponent
  /// vector for A3 (last entry 0), length-2 for C2.
  std::array<int, 4> partition() const;
  TorusWeight torus_weight() const;

  bool operator==(const DominantWeight& o) const {
    return sys_ == o.sys_ && c_ == o.c_;
  }
  bool operator<(const DominantWeight& o) const {
    if (sys_ != o.sys_) return sys_ < o.sys_;
    return c_ < o.c_;
  }

  /// "V(a,b,c)" for A3, "W(m,n)" (conventional index) for C2.
  std::string str() const;

 private:
  DominantWeight(RootSystem sys, std::array<int, 3> c) : sys_(sys), c_(c) {}
  RootSystem sys_;
  std::array<int, 3> c_;
};

/// Exact dimension by the Weyl dimension formula.
Int weyl_dimension(const DominantWeight& w);

/// Dominant weight from a dominant torus weight (throws if not dominant).
DominantWeight dominant_from_torus(const TorusWeight& t);

namespace rootdata {
/// Positive roots as raw exponent vectors (6 for A3, 4 for C2).
const std::vector<std::array<int, 4>>& positive_roots(RootSystem sys);
/// Half-sum of positive roots as a raw vector: (3,2,1,0) resp. (2,1).
std::array<int, 4> rho(RootSystem sys);
/// Euclidean pairing of raw vectors over the first torus_dim entries.
long long dot(RootSystem sys, const std::array<int, 4>& x,
              const std::array<int, 4>& y);
}  // namespace rootdata

}  // namespace extsq
