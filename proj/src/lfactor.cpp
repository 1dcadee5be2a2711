#include "extsq/lfactor.hpp"

#include <stdexcept>

namespace extsq {

namespace {

using cplx = std::complex<double>;

TorusPoly tp_zero(RootSystem sys) { return TorusPoly(sys); }

}  // namespace

std::array<cplx, 6> wedge2_eigenvalues(const std::array<cplx, 4>& chi) {
  std::array<cplx, 6> out;
  size_t k = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) out[k++] = chi[i] * chi[j];
  return out;
}

std::array<cplx, 4> spin_eigenvalues(cplx a, cplx b) {
  return {a, b, 1.0 / b, 1.0 / a};
}

std::array<cplx, 5> std5_eigenvalues(cplx a, cplx b) {
  return {a * b, a / b, cplx(1.0), b / a, 1.0 / (a * b)};
}

const std::vector<TorusWeight>& c2_spin_weights() {
  static const std::vector<TorusWeight> w = {
      TorusWeight::c2(1, 0), TorusWeight::c2(0, 1), TorusWeight::c2(0, -1),
      TorusWeight::c2(-1, 0)};
  return w;
}

const std::vector<TorusWeight>& c2_std5_weights() {
  static const std::vector<TorusWeight> w = {
      TorusWeight::c2(1, 1), TorusWeight::c2(1, -1), TorusWeight::c2(0, 0),
      TorusWeight::c2(-1, 1), TorusWeight::c2(-1, -1)};
  return w;
}

const std::vector<TorusWeight>& a3_wedge2_weights() {
  static const std::vector<TorusWeight> w = [] {
    std::vector<TorusWeight> v;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::array<int, 4> e{};
        e[static_cast<size_t>(i)] = 1;
        e[static_cast<size_t>(j)] = 1;
        v.push_back(TorusWeight::from_raw(RootSystem::A3, e));
      }
    return v;
  }();
  return w;
}

NumericFactor euler_factor_numeric(std::span<const cplx> eigs) {
  NumericFactor f{cplx(1.0)};
  for (const cplx& lam : eigs) {
    NumericFactor g(f.size() + 1, cplx(0.0));
    for (size_t i = 0; i < f.size(); ++i) {
      g[i] += f[i];
      g[i + 1] -= lam * f[i];
    }
    f = std::move(g);
  }
  return f;
}

cplx factor_eval(const NumericFactor& f, cplx t) {
  cplx v(0.0);
  for (size_t i = f.size(); i-- > 0;) v = v * t + f[i];
  return v;
}

ExactFactor factor_from_weights(
    RootSystem sys, const std::vector<std::pair<TorusWeight, int>>& ws) {
  ExactFactor f = ExactFactor::constant(tp_zero(sys), TorusPoly::one(sys));
  for (const auto& [w, sign] : ws) {
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("factor_from_weights: sign must be +-1");
    f = f * ExactFactor::linear(tp_zero(sys), TorusPoly::one(sys),
                                TorusPoly::monomial(w, Int(-sign)));
  }
  return f;
}

namespace {

std::vector<std::pair<TorusWeight, int>> plain(
    const std::vector<TorusWeight>& ws, int sign = 1) {
  std::vector<std::pair<TorusWeight, int>> v;
  v.reserve(ws.size());
  for (const auto& w : ws) v.emplace_back(w, sign);
  return v;
}

}  // namespace

ExactFactor wedge2_factor_split_exact() {
  return factor_from_weights(RootSystem::A3, plain(a3_wedge2_weights()));
}

ExactFactor wedge2_restricted_factor_exact() {
  // Specialize the rank-3 factor along (a, b, b^-1, a^-1): every coefficient
  // is pushed through the exponent substitution.
  const ExactFactor f = wedge2_factor_split_exact();
  ExactFactor r = ExactFactor::constant(tp_zero(RootSystem::C2),
                                        TorusPoly(RootSystem::C2));
  for (int i = 0; i <= f.degree(); ++i)
    r.set_coeff(i, restrict_a3_to_c2(f.coeff(i)));
  return r;
}

ExactFactor spin_factor_exact() {
  return factor_from_weights(RootSystem::C2, plain(c2_spin_weights()));
}

ExactFactor std_twisted_factor_exact(int sign) {
  return factor_from_weights(RootSystem::C2, plain(c2_std5_weights(), sign));
}

ExactFactor wedge2_factor_inert_via_spin_exact() {
  auto ws = plain(c2_spin_weights());
  ws.emplace_back(TorusWeight::c2(0, 0), 1);
  ws.emplace_back(TorusWeight::c2(0, 0), -1);
  return factor_from_weights(RootSystem::C2, ws);
}

ExactFactor wedge2_factor_inert_via_std_exact() {
  auto ws = plain(c2_std5_weights(), -1);
  ws.emplace_back(TorusWeight::c2(0, 0), 1);
  return factor_from_weights(RootSystem::C2, ws);
}

NumericFactor spin_factor_numeric(cplx a, cplx b) {
  const auto e = spin_eigenvalues(a, b);
  return euler_factor_numeric(std::span<const cplx>(e.data(), e.size()));
}

NumericFactor std_twisted_factor_numeric(cplx a, cplx b, int sign) {
  auto e = std5_eigenvalues(a, b);
  for (auto& x : e) x *= static_cast<double>(sign);
  return euler_factor_numeric(std::span<const cplx>(e.data(), e.size()));
}

NumericFactor wedge2_factor_inert_via_spin_numeric(cplx a, cplx b) {
  const auto e = spin_eigenvalues(a, b);
  std::vector<cplx> all(e.begin(), e.end());
  all.push_back(cplx(1.0));
  all.push_back(cplx(-1.0));
  return euler_factor_numeric(all);
}

NumericFactor wedge2_factor_inert_via_std_numeric(cplx a, cplx b) {
  auto e = std5_eigenvalues(a, b);
  std::vector<cplx> all;
  for (const auto& x : e) all.push_back(-x);
  all.push_back(cplx(1.0));
  return euler_factor_numeric(all);
}

bool constant_term_is_one(const ExactFactor& f) {
  return f.coeff(0) == TorusPoly::one(f.zero().system());
}

}  // namespace extsq
