#pragma once

#include "extsq/chars.hpp"
#include "extsq/repring.hpp"
#include "extsq/weights.hpp"

namespace extsq {

/// Tensor product of two irreducibles, resolved into irreducibles by the
/// Littlewood-Richardson rule on partition shapes (results are memoized).
/// Both weights must belong to the same root system.
RepRingElement lr_tensor(const DominantWeight& a, const DominantWeight& b);

/// V(0,n,0) (x) V(0,m,0) for the rank-3 group, by the closed combinatorial
/// rule: summands V(m2, n + m1 - m2 - m3, m2) over m1+m2+m3 = m with
/// m2 + m3 <= n (all parts nonnegative).
RepRingElement tensor_formula_split(int n, int m);

/// W(0,n) (x) W(0,m) for the rank-2 group: summands W(s, n + m1 - m2) over
/// m1 + m2 = m with m2 <= n and 0 <= s <= m2.
RepRingElement tensor_formula_inert(int n, int m);

/// Sym^k of the 6-dimensional irreducible V(0,1,0): direct sum of
/// V(0, k - 2i, 0) for 0 <= 2i <= k.
RepRingElement sym_wedge2_split(int k);

/// Restriction of the rank-3 irreducible V(u,v,w) to the rank-2 subgroup:
/// direct sum of W(s + t, u + w - 2t) over 0 <= s <= v, 0 <= t <= min(u,w).
RepRingElement branch_a3_to_c2(int u, int v, int w);

/// Character of Sym^k of the irreducible with highest weight `base`,
/// computed by the Newton/Adams recursion  k*h_k = sum_j psi^j(chi) h_{k-j}.
/// Throws budget_error if dim(base)^k exceeds `budget` (the work and the
/// answer both scale with that bound).
TorusPoly sym_power_character(const DominantWeight& base, int k,
                              int coord_cap = kDefaultCoordCap,
                              double budget = 1e9);

/// Write a Weyl-invariant torus polynomial as a nonnegative combination of
/// irreducible characters (greedy peeling from the top). Throws
/// not_a_character if any multiplicity would be negative, or if the input
/// is not Weyl-invariant.
RepRingElement decompose_character(RootSystem sys, const TorusPoly& chi,
                                   int coord_cap = kDefaultCoordCap);

/// Same peeling but allowing negative multiplicities (virtual characters);
/// used internally for ring arithmetic on differences.
RepRingElement decompose_virtual_character(RootSystem sys, const TorusPoly& chi,
                                           int coord_cap = kDefaultCoordCap);

}  // namespace extsq
