#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>

#include "extsq/chars.hpp"
#include "extsq/weights.hpp"

namespace extsq {

/// Formal integer combination of irreducibles of one fixed group. Addition
/// is free; multiplication is the tensor product, resolved into irreducibles
/// (via the Littlewood-Richardson rule for the rank-3 series, via character
/// arithmetic for the rank-2 one).
class RepRingElement {
 public:
  static RepRingElement zero(RootSystem sys) { return RepRingElement(sys); }
  static RepRingElement one(RootSystem sys);
  static RepRingElement irred(const DominantWeight& w);

  RootSystem system() const { return sys_; }
  const std::map<DominantWeight, Int>& terms() const { return terms_; }
  Int mult(const DominantWeight& w) const;
  void add_term(const DominantWeight& w, const Int& k);

  RepRingElement operator+(const RepRingElement& o) const;
  RepRingElement operator-(const RepRingElement& o) const;
  RepRingElement operator*(const RepRingElement& o) const;  // tensor product
  RepRingElement operator*(const Int& k) const;
  bool operator==(const RepRingElement& o) const {
    return sys_ == o.sys_ && terms_ == o.terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  bool all_nonnegative() const;
  Int dimension() const;
  TorusPoly to_character() const;
  std::complex<double> eval_numeric(std::span<const std::complex<double>> eigs) const;
  std::string str() const;

 private:
  explicit RepRingElement(RootSystem sys) : sys_(sys) {}
  RootSystem sys_;
  std::map<DominantWeight, Int> terms_;  // weight -> nonzero multiplicity
};

}  // namespace extsq
