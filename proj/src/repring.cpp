#include "extsq/repring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "extsq/decomp.hpp"

namespace extsq {

namespace {

bool is_trivial(const DominantWeight& w) {
  const auto& c = w.coords();
  return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

DominantWeight trivial_weight(RootSystem sys) {
  return sys == RootSystem::A3 ? DominantWeight::a3(0, 0, 0)
                               : DominantWeight::c2_internal(0, 0);
}

}  // namespace

RepRingElement RepRingElement::one(RootSystem sys) {
  return irred(trivial_weight(sys));
}

RepRingElement RepRingElement::irred(const DominantWeight& w) {
  RepRingElement r(w.system());
  r.terms_[w] = 1;
  return r;
}

Int RepRingElement::mult(const DominantWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void RepRingElement::add_term(const DominantWeight& w, const Int& k) {
  if (w.system() != sys_)
    throw std::invalid_argument("RepRingElement::add_term: system mismatch");
  if (k == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, k);
  } else {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

RepRingElement RepRingElement::operator+(const RepRingElement& o) const {
  if (sys_ != o.sys_)
    throw std::invalid_argument("RepRingElement: system mismatch");
  RepRingElement r = *this;
  for (const auto& [w, k] : o.terms_) r.add_term(w, k);
  return r;
}

RepRingElement RepRingElement::operator-(const RepRingElement& o) const {
  if (sys_ != o.sys_)
    throw std::invalid_argument("RepRingElement: system mismatch");
  RepRingElement r = *this;
  for (const auto& [w, k] : o.terms_) r.add_term(w, -k);
  return r;
}

RepRingElement RepRingElement::operator*(const Int& k) const {
  RepRingElement r(sys_);
  if (k == 0) return r;
  for (const auto& [w, m] : terms_) r.terms_[w] = m * k;
  return r;
}

RepRingElement RepRingElement::operator*(const RepRingElement& o) const {
  if (sys_ != o.sys_)
    throw std::invalid_argument("RepRingElement: system mismatch");
  if (is_zero() || o.is_zero()) return zero(sys_);

  // Multiples of the trivial representation act by scaling.
  if (terms_.size() == 1 && is_trivial(terms_.begin()->first))
    return o * terms_.begin()->second;
  if (o.terms_.size() == 1 && is_trivial(o.terms_.begin()->first))
    return *this * o.terms_.begin()->second;

  if (sys_ == RootSystem::A3) {
    RepRingElement r(sys_);
    for (const auto& [w1, k1] : terms_)
      for (const auto& [w2, k2] : o.terms_) {
        const RepRingElement t = lr_tensor(w1, w2);
        for (const auto& [w, k] : t.terms()) r.add_term(w, k * k1 * k2);
      }
    return r;
  }

  // C2: multiply the characters and peel the product back apart. The cap
  // covers the largest torus exponent a product weight can reach.
  int cap = 0;
  int cap_a = 0, cap_b = 0;
  for (const auto& [w, k] : terms_) cap_a = std::max(cap_a, w.partition()[0]);
  for (const auto& [w, k] : o.terms_) cap_b = std::max(cap_b, w.partition()[0]);
  cap = cap_a + cap_b;
  return decompose_virtual_character(sys_, to_character() * o.to_character(),
                                     cap);
}

bool RepRingElement::all_nonnegative() const {
  for (const auto& [w, k] : terms_)
    if (k < 0) return false;
  return true;
}

Int RepRingElement::dimension() const {
  Int d = 0;
  for (const auto& [w, k] : terms_) d += k * weyl_dimension(w);
  return d;
}

TorusPoly RepRingElement::to_character() const {
  int cap = kDefaultCoordCap;
  for (const auto& [w, k] : terms_) cap = std::max(cap, w.partition()[0]);
  TorusPoly chi(sys_);
  for (const auto& [w, k] : terms_) chi += character_freudenthal(w, cap) * k;
  return chi;
}

std::complex<double> RepRingElement::eval_numeric(
    std::span<const std::complex<double>> eigs) const {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [w, k] : terms_)
    s += static_cast<double>(to_ll(k)) * trace_numeric(w, eigs);
  return s;
}

std::string RepRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, k] : terms_) {
    if (!first) os << " + ";
    if (k != 1) os << k.str() << "*";
    os << w.str();
    first = false;
  }
  return os.str();
}

}  // namespace extsq
