#include "extsq/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace extsq {

const char* to_string(RootSystem s) {
  return s == RootSystem::A3 ? "A3" : "C2";
}

void TorusWeight::canonicalize() {
  if (sys_ == RootSystem::A3) {
    int m = std::min(std::min(e_[0], e_[1]), std::min(e_[2], e_[3]));
    for (auto& x : e_) x -= m;
  } else {
    e_[2] = e_[3] = 0;
  }
}

TorusWeight TorusWeight::a3(int e1, int e2, int e3, int e4) {
  TorusWeight t;
  t.sys_ = RootSystem::A3;
  t.e_ = {e1, e2, e3, e4};
  t.canonicalize();
  return t;
}

TorusWeight TorusWeight::c2(int e1, int e2) {
  TorusWeight t;
  t.sys_ = RootSystem::C2;
  t.e_ = {e1, e2, 0, 0};
  return t;
}

TorusWeight TorusWeight::from_raw(RootSystem sys, const std::array<int, 4>& raw) {
  return sys == RootSystem::A3 ? a3(raw[0], raw[1], raw[2], raw[3])
                               : c2(raw[0], raw[1]);
}

TorusWeight TorusWeight::operator+(const TorusWeight& o) const {
  if (sys_ != o.sys_) throw std::invalid_argument("TorusWeight: system mismatch");
  TorusWeight t;
  t.sys_ = sys_;
  for (int i = 0; i < 4; ++i) t.e_[static_cast<size_t>(i)] = e_[static_cast<size_t>(i)] + o.e_[static_cast<size_t>(i)];
  t.canonicalize();
  return t;
}

TorusWeight TorusWeight::operator-(const TorusWeight& o) const {
  return *this + (-o);
}

TorusWeight TorusWeight::operator-() const {
  TorusWeight t;
  t.sys_ = sys_;
  for (int i = 0; i < 4; ++i) t.e_[static_cast<size_t>(i)] = -e_[static_cast<size_t>(i)];
  t.canonicalize();
  return t;
}

TorusWeight TorusWeight::scaled(int k) const {
  TorusWeight t;
  t.sys_ = sys_;
  for (int i = 0; i < 4; ++i) t.e_[static_cast<size_t>(i)] = k * e_[static_cast<size_t>(i)];
  t.canonicalize();
  return t;
}

bool TorusWeight::is_zero() const {
  return e_ == std::array<int, 4>{0, 0, 0, 0};
}

bool TorusWeight::is_dominant() const {
  if (sys_ == RootSystem::A3)
    return e_[0] >= e_[1] && e_[1] >= e_[2] && e_[2] >= e_[3];
  return e_[0] >= e_[1] && e_[1] >= 0;
}

std::vector<TorusWeight> TorusWeight::weyl_orbit() const {
  std::vector<TorusWeight> out;
  if (sys_ == RootSystem::A3) {
    std::array<int, 4> v = e_;
    std::sort(v.begin(), v.end());
    do {
      out.push_back(a3(v[0], v[1], v[2], v[3]));
    } while (std::next_permutation(v.begin(), v.end()));
  } else {
    for (int swap = 0; swap < 2; ++swap)
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2) {
          int a = swap ? e_[1] : e_[0];
          int b = swap ? e_[0] : e_[1];
          out.push_back(c2(s1 * a, s2 * b));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::string TorusWeight::str() const {
  static const char* a3_names[] = {"x1", "x2", "x3", "x4"};
  static const char* c2_names[] = {"a", "b"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < torus_dim(sys_); ++i) {
    int e = e_[static_cast<size_t>(i)];
    if (e == 0) continue;
    if (!first) os << "*";
    os << (sys_ == RootSystem::A3 ? a3_names[i] : c2_names[i]);
    if (e != 1) os << "^" << e;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

DominantWeight DominantWeight::a3(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("DominantWeight: negative coordinate");
  return DominantWeight(RootSystem::A3, {a, b, c});
}

DominantWeight DominantWeight::c2_internal(int spin4, int std5) {
  if (spin4 < 0 || std5 < 0)
    throw std::invalid_argument("DominantWeight: negative coordinate");
  return DominantWeight(RootSystem::C2, {spin4, std5, 0});
}

std::pair<int, int> DominantWeight::c2_conv_index() const {
  if (sys_ != RootSystem::C2)
    throw std::invalid_argument("c2_conv_index on A3 weight");
  return {c_[1], c_[0]};
}

std::array<int, 4> DominantWeight::partition() const {
  if (sys_ == RootSystem::A3)
    return {c_[0] + c_[1] + c_[2], c_[1] + c_[2], c_[2], 0};
  return {c_[0] + c_[1], c_[1], 0, 0};
}

TorusWeight DominantWeight::torus_weight() const {
  return TorusWeight::from_raw(sys_, partition());
}

std::string DominantWeight::str() const {
  std::ostringstream os;
  if (sys_ == RootSystem::A3) {
    os << "V(" << c_[0] << "," << c_[1] << "," << c_[2] << ")";
  } else {
    auto [m, n] = c2_conv_index();
    os << "W(" << m << "," << n << ")";
  }
  return os.str();
}

Int weyl_dimension(const DominantWeight& w) {
  auto lam = w.partition();
  auto rho = rootdata::rho(w.system());
  Int num = 1, den = 1;
  for (const auto& alpha : rootdata::positive_roots(w.system())) {
    // <., alpha_v> with alpha_v = 2 alpha / <alpha,alpha>; the common factor
    // 2/<alpha,alpha> cancels between numerator and denominator.
    long long n = 0, d = 0;
    for (int i = 0; i < torus_dim(w.system()); ++i) {
      n += static_cast<long long>(lam[static_cast<size_t>(i)] + rho[static_cast<size_t>(i)]) * alpha[static_cast<size_t>(i)];
      d += static_cast<long long>(rho[static_cast<size_t>(i)]) * alpha[static_cast<size_t>(i)];
    }
    num *= n;
    den *= d;
  }
  Int q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dimension: non-integral");
  return q;
}

DominantWeight dominant_from_torus(const TorusWeight& t) {
  if (!t.is_dominant())
    throw std::invalid_argument("dominant_from_torus: weight not dominant");
  if (t.system() == RootSystem::A3)
    return DominantWeight::a3(t[0] - t[1], t[1] - t[2], t[2] - t[3]);
  return DominantWeight::c2_internal(t[0] - t[1], t[1]);
}

namespace rootdata {

const std::vector<std::array<int, 4>>& positive_roots(RootSystem sys) {
  static const std::vector<std::array<int, 4>> a3 = {
      {1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1},
      {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  static const std::vector<std::array<int, 4>> c2 = {
      {1, -1, 0, 0}, {0, 2, 0, 0}, {1, 1, 0, 0}, {2, 0, 0, 0}};
  return sys == RootSystem::A3 ? a3 : c2;
}

std::array<int, 4> rho(RootSystem sys) {
  return sys == RootSystem::A3 ? std::array<int, 4>{3, 2, 1, 0}
                               : std::array<int, 4>{2, 1, 0, 0};
}

long long dot(RootSystem sys, const std::array<int, 4>& x,
              const std::array<int, 4>& y) {
  long long s = 0;
  for (int i = 0; i < torus_dim(sys); ++i) s += static_cast<long long>(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(i)];
  return s;
}

}  // namespace rootdata
}  // namespace extsq
