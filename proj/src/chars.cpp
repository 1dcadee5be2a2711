#include "extsq/chars.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

namespace extsq {

TorusPoly TorusPoly::monomial(const TorusWeight& w, Int coeff) {
  TorusPoly p(w.system());
  if (coeff != 0) p.c_.emplace(w, std::move(coeff));
  return p;
}

Int TorusPoly::coeff(const TorusWeight& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? Int(0) : it->second;
}

void TorusPoly::add_term(const TorusWeight& w, const Int& coeff) {
  if (coeff == 0) return;
  if (w.system() != sys_) throw std::invalid_argument("TorusPoly: system mismatch");
  auto [it, fresh] = c_.emplace(w, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

TorusPoly& TorusPoly::operator+=(const TorusPoly& o) {
  if (sys_ != o.sys_) throw std::invalid_argument("TorusPoly: system mismatch");
  for (const auto& [w, k] : o.c_) add_term(w, k);
  return *this;
}

TorusPoly& TorusPoly::operator-=(const TorusPoly& o) {
  if (sys_ != o.sys_) throw std::invalid_argument("TorusPoly: system mismatch");
  for (const auto& [w, k] : o.c_) add_term(w, -k);
  return *this;
}

TorusPoly TorusPoly::operator+(const TorusPoly& o) const {
  TorusPoly r = *this;
  r += o;
  return r;
}

TorusPoly TorusPoly::operator-(const TorusPoly& o) const {
  TorusPoly r = *this;
  r -= o;
  return r;
}

TorusPoly TorusPoly::operator*(const TorusPoly& o) const {
  if (sys_ != o.sys_) throw std::invalid_argument("TorusPoly: system mismatch");
  TorusPoly r(sys_);
  for (const auto& [w1, k1] : c_)
    for (const auto& [w2, k2] : o.c_) r.add_term(w1 + w2, k1 * k2);
  return r;
}

TorusPoly TorusPoly::operator*(const Int& k) const {
  TorusPoly r(sys_);
  if (k == 0) return r;
  for (const auto& [w, c] : c_) r.c_.emplace(w, c * k);
  return r;
}

Int TorusPoly::mass() const {
  Int s = 0;
  for (const auto& [w, k] : c_) s += k;
  return s;
}

TorusPoly TorusPoly::apply_generator(int g) const {
  if (g < 0 || g >= rank(sys_))
    throw std::invalid_argument("TorusPoly::apply_generator: index");
  TorusPoly r(sys_);
  for (const auto& [w, k] : c_) {
    std::array<int, 4> e = {w[0], w[1], w[2], w[3]};
    if (sys_ == RootSystem::A3) {
      std::swap(e[static_cast<size_t>(g)], e[static_cast<size_t>(g) + 1]);
    } else if (g == 0) {
      std::swap(e[0], e[1]);
    } else {
      e[1] = -e[1];
    }
    r.add_term(TorusWeight::from_raw(sys_, e), k);
  }
  return r;
}

bool TorusPoly::weyl_invariant() const {
  for (int g = 0; g < rank(sys_); ++g)
    if (!(apply_generator(g) == *this)) return false;
  return true;
}

namespace {

std::complex<double> powi(std::complex<double> x, int e) {
  if (e < 0) return 1.0 / powi(x, -e);
  std::complex<double> r = 1.0;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::complex<double> TorusPoly::eval(
    std::span<const std::complex<double>> eigs) const {
  if (static_cast<int>(eigs.size()) != torus_dim(sys_))
    throw std::invalid_argument("TorusPoly::eval: eigenvalue count");
  std::complex<double> s = 0.0;
  for (const auto& [w, k] : c_) {
    std::complex<double> t = k.convert_to<double>();
    for (int i = 0; i < torus_dim(sys_); ++i) t *= powi(eigs[i], w[i]);
    s += t;
  }
  return s;
}

std::string TorusPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, k] : c_) {
    Int a = k < 0 ? Int(-k) : k;
    if (first) {
      if (k < 0) os << "-";
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    if (a != 1 || w.is_zero()) {
      os << a;
      if (!w.is_zero()) os << "*";
    }
    if (!w.is_zero()) os << w.str();
    first = false;
  }
  return os.str();
}

namespace {

int coord_max(const DominantWeight& w) {
  auto c = w.coords();
  return std::max({c[0], c[1], c[2]});
}

void check_cap(const DominantWeight& w, int cap, const char* who) {
  if (coord_max(w) > cap)
    throw budget_error(std::string(who) + ": coordinate bound " +
                       std::to_string(cap) + " exceeded by " + w.str());
}

std::array<int, 4> dom_rep(RootSystem sys, std::array<int, 4> v) {
  if (sys == RootSystem::A3) {
    std::sort(v.begin(), v.end(), std::greater<int>());
  } else {
    v[0] = std::abs(v[0]);
    v[1] = std::abs(v[1]);
    if (v[0] < v[1]) std::swap(v[0], v[1]);
  }
  return v;
}

std::array<int, 4> add4(const std::array<int, 4>& x, const std::array<int, 4>& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

}  // namespace

TorusPoly character_freudenthal(const DominantWeight& w, int coord_cap) {
  check_cap(w, coord_cap, "character_freudenthal");
  const RootSystem sys = w.system();
  const int n = torus_dim(sys);
  const auto lam = w.partition();
  const auto rho = rootdata::rho(sys);

  // Dominant weights that can occur: below the highest weight in the root
  // order. (A superset is harmless; the recursion returns 0 off-support.)
  std::vector<std::array<int, 4>> cand;
  if (sys == RootSystem::A3) {
    const int S = lam[0] + lam[1] + lam[2] + lam[3];
    for (int p1 = 0; p1 <= lam[0]; ++p1)
      for (int p2 = 0; p2 <= std::min(p1, lam[0] + lam[1] - p1); ++p2)
        for (int p3 = 0;
             p3 <= std::min(p2, lam[0] + lam[1] + lam[2] - p1 - p2); ++p3) {
          const int p4 = S - p1 - p2 - p3;
          if (p4 < 0 || p4 > p3) continue;
          cand.push_back({p1, p2, p3, p4});
        }
  } else {
    const int S = lam[0] + lam[1];
    for (int e1 = 0; e1 <= lam[0]; ++e1)
      for (int e2 = 0; e2 <= e1; ++e2) {
        if ((S - e1 - e2) % 2 != 0) continue;  // not in the root lattice coset
        if (S - e1 - e2 < 0) continue;
        cand.push_back({e1, e2, 0, 0});
      }
  }

  // Process in decreasing <mu, rho>: adding a positive root strictly raises
  // the pairing, so every lookup below is already resolved. Equal keys are
  // incomparable; break ties lexicographically for determinism.
  std::sort(cand.begin(), cand.end(),
            [&](const std::array<int, 4>& x, const std::array<int, 4>& y) {
              const long long kx = rootdata::dot(sys, x, rho);
              const long long ky = rootdata::dot(sys, y, rho);
              if (kx != ky) return kx > ky;
              return x > y;
            });
  if (cand.empty() || cand.front() != lam)
    throw std::logic_error("character_freudenthal: candidate enumeration");

  std::map<std::array<int, 4>, Int> mult;
  mult[lam] = 1;
  const auto& roots = rootdata::positive_roots(sys);
  const auto lam_rho = add4(lam, rho);
  const long long lam_norm = rootdata::dot(sys, lam_rho, lam_rho);

  for (size_t ci = 1; ci < cand.size(); ++ci) {
    const auto& mu = cand[ci];
    Int rhs = 0;
    for (const auto& al : roots) {
      for (int k = 1;; ++k) {
        std::array<int, 4> nu{};
        bool inside = true;
        for (int i = 0; i < n; ++i) {
          nu[static_cast<size_t>(i)] =
              mu[static_cast<size_t>(i)] + k * al[static_cast<size_t>(i)];
          const int v = nu[static_cast<size_t>(i)];
          if (sys == RootSystem::A3 ? (v < 0 || v > lam[0])
                                    : (std::abs(v) > lam[0]))
            inside = false;
        }
        if (!inside) break;  // coordinates move monotonically in k
        auto it = mult.find(dom_rep(sys, nu));
        if (it != mult.end())
          rhs += it->second * Int(rootdata::dot(sys, nu, al));
      }
    }
    if (rhs == 0) continue;
    const auto mu_rho = add4(mu, rho);
    const long long den = lam_norm - rootdata::dot(sys, mu_rho, mu_rho);
    if (den <= 0)
      throw std::logic_error("character_freudenthal: non-positive denominator");
    const Int m2 = 2 * rhs;
    if (m2 % den != 0)
      throw std::logic_error("character_freudenthal: non-integral multiplicity");
    mult[mu] = m2 / den;
  }

  TorusPoly out(sys);
  for (const auto& [p, m] : mult) {
    if (m == 0) continue;
    if (m < 0) throw std::logic_error("character_freudenthal: negative multiplicity");
    for (const auto& t : TorusWeight::from_raw(sys, p).weyl_orbit())
      out.add_term(t, m);
  }
  return out;
}

namespace {

using Exp = std::array<int, 4>;
using LMap = std::map<Exp, Int>;  // lex order; rbegin() is the leading term

void lmap_add(LMap& m, const Exp& e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Exact division of multivariate polynomials with nonnegative exponents,
// leading terms taken lexicographically. The divisor's leading coefficient
// must be +1. Throws not_a_character if any step leaves a remainder.
LMap lex_divide(LMap num, const LMap& den, const char* who) {
  if (den.empty()) throw std::logic_error("lex_divide: zero divisor");
  const auto dl = std::prev(den.end());
  if (dl->second != 1) throw std::logic_error("lex_divide: leading coefficient");
  LMap q;
  while (!num.empty()) {
    const auto nl = std::prev(num.end());
    Exp qe{};
    for (int i = 0; i < 4; ++i) {
      qe[static_cast<size_t>(i)] =
          nl->first[static_cast<size_t>(i)] - dl->first[static_cast<size_t>(i)];
      if (qe[static_cast<size_t>(i)] < 0)
        throw not_a_character(std::string(who) + ": division left a remainder");
    }
    const Int qc = nl->second;
    lmap_add(q, qe, qc);
    for (const auto& [de, dc] : den)
      lmap_add(num, add4(qe, de), -qc * dc);
  }
  return q;
}

int perm_sign(const std::array<int, 4>& p, int n) {
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
  return inv % 2 ? -1 : 1;
}

// det[x_i^{l_j}] expanded as a signed exponent sum (l strictly decreasing).
LMap a3_alternant(const std::array<int, 4>& l) {
  LMap out;
  std::array<int, 4> idx = {0, 1, 2, 3};
  do {
    Exp e{l[static_cast<size_t>(idx[0])], l[static_cast<size_t>(idx[1])],
          l[static_cast<size_t>(idx[2])], l[static_cast<size_t>(idx[3])]};
    lmap_add(out, e, perm_sign(idx, 4));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// det[x_i^{l_j} - x_i^{-l_j}] for i,j in {1,2}, all exponents shifted by
// +shift in both variables to land in the polynomial range.
LMap c2_alternant(int l1, int l2, int shift) {
  LMap out;
  auto add_product = [&](int p1, int p2, int sign) {
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        Exp e{(s1 ? -p1 : p1) + shift, (s2 ? -p2 : p2) + shift, 0, 0};
        lmap_add(out, e, ((s1 ^ s2) ? -1 : 1) * sign);
      }
  };
  add_product(l1, l2, 1);
  add_product(l2, l1, -1);
  return out;
}

}  // namespace

TorusPoly character_alternant(const DominantWeight& w, int coord_cap) {
  check_cap(w, coord_cap, "character_alternant");
  const auto lam = w.partition();
  TorusPoly out(w.system());
  if (w.system() == RootSystem::A3) {
    const std::array<int, 4> l = {lam[0] + 3, lam[1] + 2, lam[2] + 1, 0};
    const LMap q = lex_divide(a3_alternant(l), a3_alternant({3, 2, 1, 0}),
                              "character_alternant[A3]");
    for (const auto& [e, c] : q)
      out.add_term(TorusWeight::a3(e[0], e[1], e[2], e[3]), c);
  } else {
    // Shift both alternants into polynomial range; the quotient then carries
    // an extra factor (a*b)^lam1 which is subtracted off below.
    const int l1 = lam[0] + 2, l2 = lam[1] + 1;
    const LMap q = lex_divide(c2_alternant(l1, l2, l1), c2_alternant(2, 1, 2),
                              "character_alternant[C2]");
    for (const auto& [e, c] : q)
      out.add_term(TorusWeight::c2(e[0] - lam[0], e[1] - lam[0]), c);
  }
  return out;
}

TorusPoly restrict_a3_to_c2(const TorusPoly& p) {
  if (p.system() != RootSystem::A3)
    throw std::invalid_argument("restrict_a3_to_c2: expected an A3 polynomial");
  TorusPoly out(RootSystem::C2);
  // x1 -> a, x2 -> b, x3 -> b^-1, x4 -> a^-1 (well defined on the quotient:
  // the kernel monomial x1*x2*x3*x4 maps to 1).
  for (const auto& [w, c] : p.terms())
    out.add_term(TorusWeight::c2(w[0] - w[3], w[1] - w[2]), c);
  return out;
}

namespace {

std::complex<double> det4(std::complex<double> m[4][4]) {
  std::complex<double> det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (piv != c) {
      for (int k = 0; k < 4; ++k) std::swap(m[c][k], m[piv][k]);
      det = -det;
    }
    if (std::abs(m[c][c]) == 0.0) return 0.0;
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const std::complex<double> f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

std::complex<double> trace_numeric(const DominantWeight& w,
                                   std::span<const std::complex<double>> eigs) {
  const int n = torus_dim(w.system());
  if (static_cast<int>(eigs.size()) != n)
    throw std::invalid_argument("trace_numeric: eigenvalue count");
  bool near_identity = true;
  for (const auto& x : eigs)
    if (std::abs(x - 1.0) > 1e-9) {
      near_identity = false;
      break;
    }
  if (near_identity) return weyl_dimension(w).convert_to<double>();

  const auto lam = w.partition();
  if (w.system() == RootSystem::A3) {
    // Denominator via the Vandermonde product: this keeps the ratio accurate
    // even when the product of pairwise differences is small. The numerator
    // determinant has unit-modulus entries, so its absolute error stays at
    // machine scale.
    std::complex<double> den = 1.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) den *= eigs[i] - eigs[j];
    if (std::abs(den) < 1e-7)
      throw std::runtime_error("trace_numeric: torus class too close to a wall");
    const std::array<int, 4> l = {lam[0] + 3, lam[1] + 2, lam[2] + 1, 0};
    std::complex<double> m[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        m[i][j] = powi(eigs[i], l[static_cast<size_t>(j)]);
    return det4(m) / den;
  }

  const int l1 = lam[0] + 2, l2 = lam[1] + 1;
  auto f = [&](int p, int i) { return powi(eigs[i], p) - powi(eigs[i], -p); };
  const std::complex<double> num = f(l1, 0) * f(l2, 1) - f(l2, 0) * f(l1, 1);
  const std::complex<double> den = f(2, 0) * f(1, 1) - f(1, 0) * f(2, 1);
  if (std::abs(den) < 1e-7)
    throw std::runtime_error("trace_numeric: torus class too close to a wall");
  return num / den;
}

TorusPoly evaluate_character_exact(const DominantWeight& w, int coord_cap) {
  return character_freudenthal(w, coord_cap);
}

std::complex<double> evaluate_character_numeric(
    const DominantWeight& w, std::span<const std::complex<double>> eigs,
    int coord_cap) {
  return character_freudenthal(w, coord_cap).eval(eigs);
}

}  // namespace extsq
