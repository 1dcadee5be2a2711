#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "extsq/chars.hpp"
#include "extsq/poly1.hpp"
#include "extsq/weights.hpp"

namespace extsq {

/// Local factors are handled through their *inverse* polynomials
/// det(1 - rho(g) T), with T standing for q^{-s}. Two concrete value
/// domains: exact factors are polynomials in T whose coefficients are
/// Laurent polynomials in the torus symbols, numeric factors are plain
/// complex coefficient vectors (index = power of T). q itself never enters
/// the coefficients.
using ExactFactor = Poly1<TorusPoly>;
using NumericFactor = std::vector<std::complex<double>>;

// ---------- eigenvalue multisets ----------

/// The six pairwise products chi_i*chi_j (i<j), in lexicographic (i,j) order.
std::array<std::complex<double>, 6> wedge2_eigenvalues(
    const std::array<std::complex<double>, 4>& chi);

/// Eigenvalues of the 4-dimensional representation of a rank-2 class (a,b).
std::array<std::complex<double>, 4> spin_eigenvalues(std::complex<double> a,
                                                     std::complex<double> b);

/// Eigenvalues of the 5-dimensional representation: {ab, a/b, 1, b/a, 1/(ab)}.
std::array<std::complex<double>, 5> std5_eigenvalues(std::complex<double> a,
                                                     std::complex<double> b);

/// Symbolic torus-weight lists for the same multisets.
const std::vector<TorusWeight>& c2_spin_weights();
const std::vector<TorusWeight>& c2_std5_weights();
const std::vector<TorusWeight>& a3_wedge2_weights();

// ---------- factor construction ----------

/// prod_i (1 - lambda_i T) expanded into coefficients of T.
NumericFactor euler_factor_numeric(std::span<const std::complex<double>> eigs);

/// Value of an inverse-polynomial factor at T = t.
std::complex<double> factor_eval(const NumericFactor& f,
                                 std::complex<double> t);

/// prod_w (1 - sign_w * x^w T) over (weight, sign) pairs, exact in the torus
/// symbols.
ExactFactor factor_from_weights(
    RootSystem sys, const std::vector<std::pair<TorusWeight, int>>& ws);

/// Exact degree-6 factor of the pairwise-product eigenvalues of a generic
/// rank-3 class.
ExactFactor wedge2_factor_split_exact();

/// The previous factor with the class specialized to (a, b, b^-1, a^-1);
/// coefficients become rank-2 Laurent polynomials. Equal, as an exact
/// identity, to the product of the 5-dim factor and (1 - T).
ExactFactor wedge2_restricted_factor_exact();

/// Exact degree-4 factor over the 4-dim eigenvalues of a rank-2 class.
ExactFactor spin_factor_exact();

/// Exact degree-5 factor over the 5-dim eigenvalues, every eigenvalue
/// multiplied by sign (the unramified quadratic twist at sign = -1).
ExactFactor std_twisted_factor_exact(int sign);

/// Degree-6 inverse polynomial built from the 4-dim eigenvalue list together
/// with the signed pair {+1, -1}; satisfies
///   wedge2_factor_inert_via_spin() == spin_factor_exact() * (1 - T^2).
ExactFactor wedge2_factor_inert_via_spin_exact();

/// Degree-6 inverse polynomial from the 5-dim eigenvalues all twisted by -1
/// together with the untwisted {+1}; satisfies
///   wedge2_factor_inert_via_std() == std_twisted_factor_exact(-1) * (1 - T).
ExactFactor wedge2_factor_inert_via_std_exact();

// Numeric counterparts at a concrete class.
NumericFactor spin_factor_numeric(std::complex<double> a,
                                  std::complex<double> b);
NumericFactor std_twisted_factor_numeric(std::complex<double> a,
                                         std::complex<double> b, int sign);
NumericFactor wedge2_factor_inert_via_spin_numeric(std::complex<double> a,
                                                   std::complex<double> b);
NumericFactor wedge2_factor_inert_via_std_numeric(std::complex<double> a,
                                                  std::complex<double> b);

/// Helpers for formatting / validation.
bool constant_term_is_one(const ExactFactor& f);

}  // namespace extsq
