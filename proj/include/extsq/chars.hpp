#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "extsq/weights.hpp"

namespace extsq {

/// Raised when a requested character/plethysm exceeds the configured bound.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the Weyl alternant division leaves a remainder (internal
/// inconsistency) or a decomposition input is not a genuine character.
struct not_a_character : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact Laurent polynomial in the torus coordinates, with big-integer
/// coefficients. Doubles as the formal character of a representation (all
/// coefficients positive) and as the exact value domain of symbolic
/// evaluations. A3 monomials are reduced modulo x1*x2*x3*x4 = 1.
class TorusPoly {
 public:
  explicit TorusPoly(RootSystem sys) : sys_(sys) {}
  static TorusPoly monomial(const TorusWeight& w, Int coeff = 1);
  static TorusPoly one(RootSystem sys) {
    return monomial(sys == RootSystem::A3 ? TorusWeight::a3(0, 0, 0, 0)
                                          : TorusWeight::c2(0, 0));
  }

  RootSystem system() const { return sys_; }
  const std::map<TorusWeight, Int>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(const TorusWeight& w) const;
  void add_term(const TorusWeight& w, const Int& coeff);

  TorusPoly& operator+=(const TorusPoly& o);
  TorusPoly& operator-=(const TorusPoly& o);
  TorusPoly operator+(const TorusPoly& o) const;
  TorusPoly operator-(const TorusPoly& o) const;
  TorusPoly operator*(const TorusPoly& o) const;
  TorusPoly operator*(const Int& k) const;
  bool operator==(const TorusPoly& o) const {
    return sys_ == o.sys_ && c_ == o.c_;
  }

  /// Sum of all coefficients; equals the dimension for a character.
  Int mass() const;
  /// Exponent substitution by a Weyl group generator index.
  TorusPoly apply_generator(int g) const;
  /// True iff invariant under every Weyl-group generator.
  bool weyl_invariant() const;

  /// Numeric evaluation at torus eigenvalues (4 for A3, 2 for C2).
  std::complex<double> eval(std::span<const std::complex<double>> eigs) const;

  std::string str() const;

 private:
  RootSystem sys_;
  std::map<TorusWeight, Int> c_;
};

inline constexpr int kDefaultCoordCap = 12;

/// Weight multiplicities by Freudenthal's recursion. Total mass equals
/// weyl_dimension(w). Throws budget_error past coord_cap.
TorusPoly character_freudenthal(const DominantWeight& w,
                                int coord_cap = kDefaultCoordCap);

/// Same contract via the Weyl character formula: ratio of alternating
/// exponential sums, computed by exact multivariate Laurent division.
/// Independent of character_freudenthal; throws not_a_character if the
/// division leaves a remainder.
TorusPoly character_alternant(const DominantWeight& w,
                              int coord_cap = kDefaultCoordCap);

/// Exact exponent substitution x1->a, x2->b, x3->b^-1, x4->a^-1, turning an
/// A3 character into the character of its restriction.
TorusPoly restrict_a3_to_c2(const TorusPoly& p);

/// Numeric trace at a regular semisimple class via the alternant determinant
/// ratio; O(1) regardless of the weight size. Falls back to the Weyl
/// dimension at the identity class and throws on (near-)singular alternants
/// elsewhere.
std::complex<double> trace_numeric(const DominantWeight& w,
                                   std::span<const std::complex<double>> eigs);

/// Character evaluated as an exact Laurent polynomial in the torus symbols
/// (the exact-mode Satake evaluation at the generic class).
TorusPoly evaluate_character_exact(const DominantWeight& w,
                                   int coord_cap = kDefaultCoordCap);

/// Character evaluated at numeric eigenvalues through the weight multiset;
/// cross-checks trace_numeric on small weights.
std::complex<double> evaluate_character_numeric(
    const DominantWeight& w, std::span<const std::complex<double>> eigs,
    int coord_cap = kDefaultCoordCap);

}  // namespace extsq
