#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace extsq {

/// Dense univariate polynomial over an arbitrary commutative coefficient
/// ring. The ring's zero is passed in explicitly so coefficient types that
/// carry runtime context (torus polynomials, rationals) all work the same
/// way. Trailing zeros are trimmed, so degree() is exact.
template <class C>
class Poly1 {
 public:
  explicit Poly1(C zero) : zero_(std::move(zero)) {}

  static Poly1 constant(const C& zero, const C& c0) {
    Poly1 p(zero);
    p.set_coeff(0, c0);
    return p;
  }
  /// c0 + c1*T
  static Poly1 linear(const C& zero, const C& c0, const C& c1) {
    Poly1 p(zero);
    p.set_coeff(0, c0);
    p.set_coeff(1, c1);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const C& zero() const { return zero_; }
  const C& coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size()))
               ? c_[static_cast<size_t>(i)]
               : zero_;
  }
  void set_coeff(int i, const C& v) {
    if (i < 0) throw std::invalid_argument("Poly1: negative index");
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, zero_);
    c_[static_cast<size_t>(i)] = v;
    trim();
  }

  Poly1 operator+(const Poly1& o) const {
    Poly1 r(zero_);
    const size_t n = std::max(c_.size(), o.c_.size());
    r.c_.assign(n, zero_);
    for (size_t i = 0; i < n; ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  Poly1 operator-(const Poly1& o) const {
    Poly1 r(zero_);
    const size_t n = std::max(c_.size(), o.c_.size());
    r.c_.assign(n, zero_);
    for (size_t i = 0; i < n; ++i) r.c_[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  Poly1 operator*(const Poly1& o) const {
    Poly1 r(zero_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    r.trim();
    return r;
  }
  bool operator==(const Poly1& o) const { return c_ == o.c_; }

  /// Exact division by (1 - T); throws if there is a remainder. Quotient
  /// coefficients are the prefix sums of the dividend's.
  Poly1 divide_by_one_minus_t(const char* who) const {
    Poly1 r(zero_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size() - 1, zero_);
    C run = zero_;
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
      run = run + c_[i];
      r.c_[i] = run;
    }
    if (!(run + c_.back() == zero_))
      throw std::invalid_argument(std::string(who) + ": remainder in division by (1 - T)");
    r.trim();
    return r;
  }

  /// "c0 + c1*T + c2*T^2" using each coefficient's own to-string hook.
  template <class Fmt>
  std::string str(Fmt&& fmt, const char* var = "T") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << " + ";
      os << "(" << fmt(c_[i]) << ")";
      if (i == 1) os << "*" << var;
      if (i > 1) os << "*" << var << "^" << i;
    }
    return os.str();
  }

 private:
  C zero_;
  std::vector<C> c_;
  void trim() {
    while (!c_.empty() && c_.back() == zero_) c_.pop_back();
  }
};

}  // namespace extsq
