#include "extsq/decomp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace extsq {

namespace {

/// Number of Littlewood-Richardson skew tableaux of shape nu/lam with
/// content mu. Cells are filled in reverse-reading-word order (rows top to
/// bottom, right to left within a row), so the ballot condition can be
/// enforced on every prefix as it is built.
long long lr_count(const std::array<int, 4>& lam, const std::array<int, 4>& mu,
                   const std::array<int, 4>& nu) {
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < 4; ++r)
    for (int c = nu[r] - 1; c >= lam[r]; --c) cells.push_back({r, c});

  std::vector<std::vector<int>> val(4, std::vector<int>(std::max(nu[0], 1), 0));
  std::array<int, 5> cnt{};  // occurrences of each value 1..4 so far
  long long total = 0;

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == cells.size()) {
      ++total;  // content == mu is forced: cnt[v] <= mu[v] and totals agree
      return;
    }
    const int r = cells[i].r, c = cells[i].c;
    int vmax = 4;
    if (c + 1 < nu[r]) vmax = val[r][c + 1];  // weakly increasing along rows
    int vmin = 1;
    if (r > 0 && c >= lam[r - 1]) vmin = val[r - 1][c] + 1;  // strict in columns
    for (int v = vmin; v <= vmax; ++v) {
      if (cnt[v] >= mu[v - 1]) continue;
      if (v >= 2 && cnt[v] >= cnt[v - 1]) continue;  // ballot condition
      val[r][c] = v;
      ++cnt[v];
      self(self, i + 1);
      --cnt[v];
    }
  };
  rec(rec, 0);
  return total;
}

/// Exponent-scaling (Adams) operation on a character: each torus weight is
/// multiplied by j, which realizes the power-sum symmetric function of the
/// weight multiset.
TorusPoly adams(const TorusPoly& chi, int j) {
  TorusPoly r(chi.system());
  for (const auto& [w, c] : chi.terms()) r.add_term(w.scaled(j), c);
  return r;
}

/// Smallest coordinate cap covering every dominant weight that can appear
/// while peeling chi: for an invariant polynomial the sorted representative
/// of each orbit is in the support, so the max leading coordinate over
/// dominant support weights bounds all later tops.
int needed_cap(const TorusPoly& chi) {
  int cap = 0;
  for (const auto& [w, c] : chi.terms())
    if (w.is_dominant()) cap = std::max(cap, w[0]);
  return cap;
}

RepRingElement decompose_impl(RootSystem sys, const TorusPoly& chi,
                              int coord_cap, bool allow_negative) {
  if (chi.system() != sys)
    throw std::invalid_argument("decompose_character: system mismatch");
  if (!chi.weyl_invariant())
    throw not_a_character("decompose_character: input is not Weyl-invariant");
  const int cap = std::max(coord_cap, needed_cap(chi));
  const auto rho = rootdata::rho(sys);

  RepRingElement out = RepRingElement::zero(sys);
  TorusPoly rem = chi;
  while (!rem.is_zero()) {
    // The highest remaining level is attained at a dominant support weight;
    // ties are broken lexicographically on fundamental coordinates.
    bool found = false;
    TorusWeight best;
    std::array<int, 3> best_coords{};
    long long best_level = 0;
    for (const auto& [w, c] : rem.terms()) {
      if (!w.is_dominant()) continue;
      const std::array<int, 4> raw{w[0], w[1], w[2], w[3]};
      const long long level = rootdata::dot(sys, raw, rho);
      if (found && level < best_level) continue;
      const auto coords = dominant_from_torus(w).coords();
      if (!found || level > best_level ||
          (level == best_level && best_coords < coords)) {
        found = true;
        best = w;
        best_coords = coords;
        best_level = level;
      }
    }
    if (!found)
      throw not_a_character(
          "decompose_character: no dominant weight in remaining support");
    const DominantWeight top = dominant_from_torus(best);
    const Int c = rem.coeff(best);
    if (!allow_negative && c < 0)
      throw not_a_character("decompose_character: negative multiplicity at " +
                            top.str());
    out.add_term(top, c);
    rem -= character_freudenthal(top, cap) * c;
  }
  return out;
}

}  // namespace

RepRingElement lr_tensor(const DominantWeight& a, const DominantWeight& b) {
  if (a.system() != RootSystem::A3 || b.system() != RootSystem::A3)
    throw std::invalid_argument("lr_tensor: both weights must be in A3");
  const auto lam = a.partition();
  const auto mu = b.partition();
  const int boxes = mu[0] + mu[1] + mu[2] + mu[3];
  const int total = lam[0] + lam[1] + lam[2] + lam[3] + boxes;

  RepRingElement out = RepRingElement::zero(RootSystem::A3);
  for (int n1 = lam[0]; n1 <= lam[0] + mu[0]; ++n1)
    for (int n2 = lam[1]; n2 <= n1; ++n2)
      for (int n3 = lam[2]; n3 <= n2; ++n3) {
        const int n4 = total - n1 - n2 - n3;
        if (n4 < lam[3] || n4 > n3) continue;
        const long long c = lr_count(lam, mu, {n1, n2, n3, n4});
        if (c > 0)
          out.add_term(DominantWeight::a3(n1 - n2, n2 - n3, n3 - n4), Int(c));
      }

  if (out.dimension() != weyl_dimension(a) * weyl_dimension(b))
    throw std::logic_error("lr_tensor: dimension mismatch for " + a.str() +
                           " (x) " + b.str());
  return out;
}

RepRingElement tensor_formula_split(int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("tensor_formula_split: negative index");
  RepRingElement out = RepRingElement::zero(RootSystem::A3);
  for (int m1 = 0; m1 <= m; ++m1)
    for (int m2 = 0; m2 + m1 <= m; ++m2) {
      const int m3 = m - m1 - m2;
      if (m2 + m3 > n) continue;
      out.add_term(DominantWeight::a3(m2, n + m1 - m2 - m3, m2), 1);
    }
  return out;
}

RepRingElement tensor_formula_inert(int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("tensor_formula_inert: negative index");
  RepRingElement out = RepRingElement::zero(RootSystem::C2);
  for (int m2 = 0; m2 <= m && m2 <= n; ++m2) {
    const int m1 = m - m2;
    for (int s = 0; s <= m2; ++s)
      out.add_term(DominantWeight::c2_conv(s, n + m1 - m2), 1);
  }
  return out;
}

RepRingElement sym_wedge2_split(int k) {
  if (k < 0) throw std::invalid_argument("sym_wedge2_split: negative power");
  RepRingElement out = RepRingElement::zero(RootSystem::A3);
  for (int i = 0; 2 * i <= k; ++i)
    out.add_term(DominantWeight::a3(0, k - 2 * i, 0), 1);
  return out;
}

RepRingElement branch_a3_to_c2(int u, int v, int w) {
  if (u < 0 || v < 0 || w < 0)
    throw std::invalid_argument("branch_a3_to_c2: negative coordinate");
  RepRingElement out = RepRingElement::zero(RootSystem::C2);
  for (int s = 0; s <= v; ++s)
    for (int t = 0; t <= std::min(u, w); ++t)
      out.add_term(DominantWeight::c2_conv(s + t, u + w - 2 * t), 1);
  return out;
}

TorusPoly sym_power_character(const DominantWeight& base, int k, int coord_cap,
                              double budget) {
  if (k < 0) throw std::invalid_argument("sym_power_character: negative power");
  const double dim = static_cast<double>(to_ll(weyl_dimension(base)));
  if (std::pow(dim, k) > budget)
    throw budget_error("sym_power_character: dim^k exceeds budget for " +
                       base.str() + " at k=" + std::to_string(k));
  const auto bw = base.torus_weight();
  int wmax = 0;
  for (int i = 0; i < torus_dim(base.system()); ++i)
    wmax = std::max(wmax, std::abs(bw[i]));
  const int cap = std::max(coord_cap, wmax * std::max(k, 1));

  const TorusPoly chi = character_freudenthal(base, cap);
  std::vector<TorusPoly> h;
  h.reserve(static_cast<size_t>(k) + 1);
  h.push_back(TorusPoly::one(base.system()));
  for (int kk = 1; kk <= k; ++kk) {
    TorusPoly acc(base.system());
    for (int j = 1; j <= kk; ++j) acc += adams(chi, j) * h[static_cast<size_t>(kk - j)];
    // Newton's identity: kk * h_kk = sum_j psi_j * h_{kk-j}; divide exactly.
    TorusPoly hk(base.system());
    for (const auto& [w, c] : acc.terms()) {
      if (c % kk != 0)
        throw std::logic_error("sym_power_character: non-integral division");
      hk.add_term(w, c / kk);
    }
    h.push_back(std::move(hk));
  }
  return h[static_cast<size_t>(k)];
}

RepRingElement decompose_character(RootSystem sys, const TorusPoly& chi,
                                   int coord_cap) {
  return decompose_impl(sys, chi, coord_cap, /*allow_negative=*/false);
}

RepRingElement decompose_virtual_character(RootSystem sys, const TorusPoly& chi,
                                           int coord_cap) {
  return decompose_impl(sys, chi, coord_cap, /*allow_negative=*/true);
}

}  // namespace extsq
