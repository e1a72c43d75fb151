#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "unicover/group.hpp"

using namespace unicov;

TEST_CASE("element orders, powers, exponent") {
  FiniteGroup g = abelian({4, 2});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.is_abelian());
  for (Elt x = 0; x < g.order(); ++x) {
    CHECK(g.pow(x, g.elt_order(x)) == 0);
    CHECK(g.mul(x, g.inv(x)) == 0);
  }
  CHECK(abelian_invariants(g) == std::vector<long>{2, 4});

  FiniteGroup d = dihedral(6);
  CHECK(d.order() == 12);
  CHECK_FALSE(d.is_abelian());
  CHECK(d.exponent() == 6);  // lcm of 6 and 2
}

TEST_CASE("commutators, center, derived series") {
  FiniteGroup d4 = dihedral(4);
  CHECK(center(d4).order() == 2);
  CHECK(derived_subgroup(d4).order() == 2);
  CHECK(derived_length(d4) == 2);
  CHECK(nilpotency_class(d4) == 2);
  CHECK(nilpotency_class(dihedral(8)) == 3);
  CHECK_FALSE(nilpotency_class(dihedral(3)).has_value());
  CHECK(derived_length(dihedral(3)) == 2);
  CHECK(derived_length(abelian({2, 2})) == 1);
}

TEST_CASE("normal subgroups of Q8") {
  FiniteGroup q8 = quaternion8();
  auto ns = normal_subgroups(q8);
  CHECK(ns.size() == 6);  // 1, Z, three C4, Q8
  int by_order[9] = {0};
  for (auto& n : ns) by_order[n.order()]++;
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 1);
  CHECK(by_order[4] == 3);
  CHECK(by_order[8] == 1);
}

TEST_CASE("quotients carry consistent projection and section") {
  FiniteGroup d4 = dihedral(4);
  QuotientGroup q = quotient(d4, center(d4));
  CHECK(q.group.order() == 4);
  CHECK(q.group.exponent() == 2);  // D4 / Z = C2 x C2
  for (int i = 0; i < q.group.order(); ++i) CHECK(q.proj[q.section[i]] == i);
  for (Elt a = 0; a < d4.order(); ++a)
    for (Elt b = 0; b < d4.order(); ++b)
      CHECK(q.proj[d4.mul(a, b)] == q.group.mul(q.proj[a], q.proj[b]));
}

TEST_CASE("subgroup closure and sylow") {
  FiniteGroup d6 = dihedral(6);
  CHECK(sylow(d6, 2).order() == 4);
  CHECK(sylow(d6, 3).order() == 3);
  Subgroup s = subgroup_generated(d6, {Elt(2)});
  CHECK(s.order() == 3);
  CHECK(is_normal(d6, s));
}

TEST_CASE("extraspecial groups split by exponent type") {
  FiniteGroup a = extraspecial(3, ExtraspecialType::ExponentP);
  FiniteGroup b = extraspecial(3, ExtraspecialType::ExponentPSquared);
  CHECK(a.order() == 27);
  CHECK(b.order() == 27);
  CHECK(a.exponent() == 3);
  CHECK(b.exponent() == 9);
  CHECK_FALSE(is_isomorphic(a, b));
  CHECK(nilpotency_class(a) == 2);
}

TEST_CASE("isomorphism testing separates the order-8 groups") {
  CHECK_FALSE(is_isomorphic(dihedral(4), quaternion8()));
  CHECK_FALSE(is_isomorphic(abelian({8}), abelian({2, 4})));
  CHECK(is_isomorphic(abelian({2, 4}), abelian({4, 2})));
  CHECK(is_isomorphic(dihedral(3), semidirect_full(
                                        cyclic(3), cyclic(2),
                                        {{0, 1, 2}, {0, 2, 1}}, "C3:C2")));
}

TEST_CASE("example fixtures have the stated shapes") {
  FiniteGroup g2 = example_G(2);
  CHECK(g2.order() == 16);
  CHECK(g2.exponent() == 4);
  CHECK(derived_length(g2) == 2);
  FiniteGroup g3 = example_G(3);
  CHECK(g3.order() == 81);
  CHECK(g3.exponent() == 9);

  FiniteGroup c1 = example_Gamma1(2);
  CHECK(c1.order() == 32);
  CHECK(c1.exponent() == 8);

  // At p=2 the z-twist accumulates: (xy)^4 = z^2, so the exponent is 8,
  // not 4; at odd p the accumulation sum vanishes mod p^2.
  FiniteGroup c2 = example_Gamma2(2);
  CHECK(c2.order() == 64);
  CHECK(c2.exponent() == 8);
  CHECK(example_Gamma2(3).exponent() == 9);

  FiniteGroup b = burnside23();
  CHECK(b.order() == 27);
  CHECK(b.exponent() == 3);
  CHECK_FALSE(b.is_abelian());
}

TEST_CASE("Gamma2 over the central z is the example group") {
  for (long p : {2L, 3L}) {
    FiniteGroup c2 = example_Gamma2(p);
    Elt zt = Elt(p * p * p * p);  // kernel element (v=1, u=0)
    Subgroup z = subgroup_generated(c2, {zt});
    CHECK(z.order() == p * p);
    CHECK(is_central(c2, z));
    CHECK(is_isomorphic(quotient(c2, z).group, example_G(p)));
  }
}

TEST_CASE("agemo, powerful, regular") {
  FiniteGroup a = abelian({4, 2});
  CHECK(agemo(a, 1).order() == 2);
  CHECK(is_powerful(abelian({3, 9})));
  CHECK_FALSE(is_powerful(burnside23()));
  CHECK(is_regular(abelian({8})));
  CHECK(is_regular(burnside23()));  // class 2 < 3
  CHECK_FALSE(is_regular(dihedral(4)));  // regular 2-groups are abelian
}

TEST_CASE("has_square_at_exponent reads the invariant tail") {
  CHECK(has_square_at_exponent({2, 2}));
  CHECK(has_square_at_exponent({2, 4, 4}));
  CHECK_FALSE(has_square_at_exponent({2, 4}));
  CHECK_FALSE(has_square_at_exponent({8}));
}

TEST_CASE("surjective homomorphism existence") {
  CHECK(surjective_hom_exists(cyclic(4), cyclic(2)));
  CHECK_FALSE(surjective_hom_exists(cyclic(2), cyclic(4)));
  CHECK(surjective_hom_exists(quaternion8(), abelian({2, 2})));
  CHECK_FALSE(surjective_hom_exists(abelian({2, 2}), cyclic(4)));
  CHECK(surjective_hom_exists(dihedral(3), cyclic(2)));
  CHECK_FALSE(surjective_hom_exists(cyclic(3), cyclic(2)));
  CHECK(surjective_hom_exists(example_G(2), abelian({2, 4})));  // G/G'
}

TEST_CASE("generating sets are small and generate") {
  for (const FiniteGroup& g :
       {abelian({2, 2, 2}), dihedral(5), example_G(2), burnside23()}) {
    auto gens = generating_set(g);
    CHECK(subgroup_generated(g, gens).order() == g.order());
    CHECK(gens.size() <= 3);
  }
  CHECK(generating_set(abelian({2, 2, 2})).size() == 3);
}

TEST_CASE("two generator subgroups cover the cyclic ones") {
  FiniteGroup g = abelian({2, 2, 2});
  auto subs = two_generator_subgroups(g);
  for (auto& s : subs) CHECK(s.order() <= 4);
  // every element lies in at least one listed subgroup
  for (Elt x = 0; x < g.order(); ++x) {
    bool found = false;
    for (auto& s : subs) found = found || s.contains(x);
    CHECK(found);
  }
}

TEST_CASE("content hash distinguishes distinct tables") {
  CHECK(cyclic(4).content_hash() == cyclic(4).content_hash());
  CHECK(cyclic(4).content_hash() != abelian({2, 2}).content_hash());
}
