#include "doctest.h"

#include "extsq/chars.hpp"
#include "extsq/decomp.hpp"
#include "extsq/repring.hpp"

using namespace extsq;

namespace {

RepRingElement rr(std::initializer_list<std::pair<DominantWeight, int>> ts) {
  RepRingElement e = RepRingElement::zero(ts.begin()->first.system());
  for (const auto& [w, c] : ts) e.add_term(w, c);
  return e;
}

}  // namespace

TEST_CASE("tableau tensor products: standard times standard") {
  const auto got =
      lr_tensor(DominantWeight::a3(1, 0, 0), DominantWeight::a3(1, 0, 0));
  CHECK(got == rr({{DominantWeight::a3(2, 0, 0), 1},
                   {DominantWeight::a3(0, 1, 0), 1}}));
}

TEST_CASE("tableau tensor products: 6-dim squared") {
  const auto got =
      lr_tensor(DominantWeight::a3(0, 1, 0), DominantWeight::a3(0, 1, 0));
  CHECK(got == rr({{DominantWeight::a3(0, 2, 0), 1},
                   {DominantWeight::a3(1, 0, 1), 1},
                   {DominantWeight::a3(0, 0, 0), 1}}));
}

TEST_CASE("closed-form split tensor at (2,2) lists the six expected summands") {
  const auto got = tensor_formula_split(2, 2);
  CHECK(got == rr({{DominantWeight::a3(0, 4, 0), 1},
                   {DominantWeight::a3(1, 2, 1), 1},
                   {DominantWeight::a3(0, 2, 0), 1},
                   {DominantWeight::a3(2, 0, 2), 1},
                   {DominantWeight::a3(1, 0, 1), 1},
                   {DominantWeight::a3(0, 0, 0), 1}}));
  CHECK(got.dimension() == 400);
}

TEST_CASE("closed-form inert tensor at small indices") {
  CHECK(tensor_formula_inert(1, 1) == rr({{DominantWeight::c2_conv(0, 2), 1},
                                          {DominantWeight::c2_conv(0, 0), 1},
                                          {DominantWeight::c2_conv(1, 0), 1}}));
  CHECK(tensor_formula_inert(2, 1) == rr({{DominantWeight::c2_conv(0, 3), 1},
                                          {DominantWeight::c2_conv(0, 1), 1},
                                          {DominantWeight::c2_conv(1, 1), 1}}));
  CHECK(tensor_formula_inert(2, 1).dimension() == 40);
}

TEST_CASE("closed-form symmetric square of the 6-dim irreducible") {
  CHECK(sym_wedge2_split(2) == rr({{DominantWeight::a3(0, 2, 0), 1},
                                   {DominantWeight::a3(0, 0, 0), 1}}));
  CHECK(sym_wedge2_split(2).dimension() == 21);
}

TEST_CASE("closed-form branching at small highest weights") {
  CHECK(branch_a3_to_c2(0, 1, 0) == rr({{DominantWeight::c2_conv(1, 0), 1},
                                        {DominantWeight::c2_conv(0, 0), 1}}));
  CHECK(branch_a3_to_c2(1, 0, 1) == rr({{DominantWeight::c2_conv(0, 2), 1},
                                        {DominantWeight::c2_conv(1, 0), 1}}));
  for (int n = 0; n <= 4; ++n)
    CHECK(branch_a3_to_c2(n, 0, 0) ==
          RepRingElement::irred(DominantWeight::c2_conv(0, n)));
}

TEST_CASE("symmetric powers of the standard representation stay irreducible") {
  for (int k = 0; k <= 5; ++k)
    CHECK(sym_power_character(DominantWeight::a3(1, 0, 0), k) ==
          character_freudenthal(DominantWeight::a3(k, 0, 0)));
}

TEST_CASE("symmetric-power mass is a binomial coefficient") {
  // dim Sym^3 of a 6-dim space = C(8,3) = 56
  CHECK(sym_power_character(DominantWeight::a3(0, 1, 0), 3).mass() == 56);
  // dim Sym^4 of a 4-dim space = C(7,4) = 35
  CHECK(sym_power_character(DominantWeight::c2_conv(0, 1), 4).mass() == 35);
}

TEST_CASE("decomposition inverts expansion") {
  const RepRingElement e = rr({{DominantWeight::a3(1, 0, 1), 2},
                               {DominantWeight::a3(0, 2, 0), 1},
                               {DominantWeight::a3(0, 0, 0), 3}});
  CHECK(decompose_character(RootSystem::A3, e.to_character()) == e);
  const RepRingElement f = rr({{DominantWeight::c2_conv(1, 1), 1},
                               {DominantWeight::c2_conv(0, 2), 2}});
  CHECK(decompose_character(RootSystem::C2, f.to_character()) == f);
}

TEST_CASE("decomposition rejects non-characters") {
  TorusPoly junk = TorusPoly::monomial(TorusWeight::a3(1, 0, 0, 0));
  CHECK_THROWS_AS(decompose_character(RootSystem::A3, junk), not_a_character);

  TorusPoly neg = character_freudenthal(DominantWeight::a3(1, 0, 0)) -
                  TorusPoly::one(RootSystem::A3) * Int(2);
  CHECK_THROWS_AS(decompose_character(RootSystem::A3, neg), not_a_character);

  const RepRingElement v = decompose_virtual_character(RootSystem::A3, neg);
  CHECK(v == rr({{DominantWeight::a3(1, 0, 0), 1},
                 {DominantWeight::a3(0, 0, 0), -2}}));
  CHECK(!v.all_nonnegative());
}

TEST_CASE("plethysm respects the work budget") {
  CHECK_THROWS_AS(
      sym_power_character(DominantWeight::a3(1, 0, 1), 20, 40, 1000.0),
      budget_error);
}

TEST_CASE("representation-ring products agree with character arithmetic") {
  const auto w1 = DominantWeight::c2_conv(1, 0);
  const auto w2 = DominantWeight::c2_conv(0, 1);
  const RepRingElement p =
      RepRingElement::irred(w1) * RepRingElement::irred(w2);
  CHECK(p.dimension() == 20);
  CHECK(p.to_character() ==
        character_freudenthal(w1) * character_freudenthal(w2));
  // multiplying by the unit costs nothing and changes nothing
  CHECK(p * RepRingElement::one(RootSystem::C2) == p);
  CHECK((p * RepRingElement::zero(RootSystem::C2)).is_zero());
}
