#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "unicover/multiplier.hpp"

using namespace unicov;

TEST_CASE("pipeline agrees with the bar-resolution homology oracle") {
  std::vector<FiniteGroup> gs;
  gs.push_back(abelian({2, 2}));
  gs.push_back(cyclic(9));
  gs.push_back(abelian({2, 4}));
  gs.push_back(dihedral(4));
  gs.push_back(quaternion8());
  gs.push_back(dihedral(5));
  gs.push_back(abelian({3, 3}));
  gs.push_back(dihedral(6));
  gs.push_back(abelian({2, 2, 2}));
  for (const auto& g : gs) {
    CAPTURE(g.name());
    CHECK(schur_multiplier(g).invariants() == homology_multiplier(g));
  }
}

TEST_CASE("known multipliers and cover exponents") {
  struct Row {
    FiniteGroup g;
    std::vector<int64_t> m;
    int64_t cover;
  };
  std::vector<Row> rows;
  rows.push_back({abelian({2, 2}), {2}, 4});
  rows.push_back({abelian({2, 4}), {2}, 4});
  rows.push_back({abelian({4, 4}), {4}, 8});
  rows.push_back({abelian({2, 8}), {2}, 8});
  rows.push_back({abelian({3, 9}), {3}, 9});
  rows.push_back({abelian({3, 3}), {3}, 3});
  rows.push_back({abelian({2, 4, 4}), {2, 2, 4}, 8});
  // Q8 is its own cover; every cover of D4 (D8, Q16, SD16) has exponent 8
  rows.push_back({quaternion8(), {}, 4});
  rows.push_back({dihedral(4), {2}, 8});
  rows.push_back({burnside23(), {3, 3}, 9});
  for (const auto& r : rows) {
    CAPTURE(r.g.name());
    MultiplierData md = schur_multiplier(r.g);
    CHECK(md.invariants() == r.m);
    CHECK(unitary_cover_exponent(md) == r.cover);
  }
}

TEST_CASE("abelian closed form matches the pipeline") {
  for (const std::vector<long>& inv :
       {std::vector<long>{2, 2}, {2, 4}, {4, 4}, {2, 2, 2}, {3, 9}, {2, 4, 8}, {2, 2, 4}}) {
    FiniteGroup g = abelian(inv);
    CAPTURE(g.name());
    CHECK(schur_multiplier(g).invariants() == abelian_multiplier_invariants(inv));
  }
  CHECK(abelian_multiplier_invariants({6}).empty());
  CHECK(abelian_multiplier_invariants({2, 4, 4}) == std::vector<int64_t>{2, 2, 4});
}

TEST_CASE("generators realize the invariant decomposition") {
  for (const auto& g : {abelian({2, 4, 4}), dihedral(4), burnside23()}) {
    CAPTURE(g.name());
    MultiplierData md = schur_multiplier(g);
    auto inv = md.invariants();
    int64_t prod = 1;
    for (auto d : inv) prod *= d;
    CHECK(md.order() == prod);
    CHECK(md.exponent() == (inv.empty() ? 1 : inv.back()));
    for (size_t i = 0; i < inv.size(); ++i) {
      Cocycle gi = md.generator(i);
      CHECK(is_cocycle(g, gi));
      CHECK(is_unitary(g, gi));
      CHECK(class_order(md.spaces.bu, gi.sparse()) == inv[i]);
      auto dec = md.class_decompose(gi);
      for (size_t j = 0; j < dec.size(); ++j) CHECK(dec[j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("cover exponent bounds") {
  // exp G and exp M both divide the cover exponent
  for (const auto& g : {abelian({2, 2}), dihedral(4), abelian({4, 4}), burnside23(),
                        dihedral(6), example_G(2)}) {
    CAPTURE(g.name());
    MultiplierData md = schur_multiplier(g);
    int64_t cover = unitary_cover_exponent(md);
    CHECK(cover % g.exponent() == 0);
    CHECK(cover % md.exponent() == 0);
    CHECK(cover == std::lcm(md.spaces.zu.exponent(), g.exponent()));
  }
  CHECK(unitary_cover_exponent(schur_multiplier(abelian({3, 3}))) == 3);
}

TEST_CASE("multiplier order divides the product over Sylow subgroups") {
  for (const auto& g : {dihedral(6), dihedral(9), abelian({2, 6})}) {
    CAPTURE(g.name());
    int64_t mg = schur_multiplier(g).order();
    int64_t prod = 1;
    for (auto [p, e] : factorize(g.order())) {
      (void)e;
      SubgroupGroup s = subgroup_as_group(sylow(g, p));
      prod *= schur_multiplier(s.group).order();
    }
    CHECK(prod % mg == 0);
  }
  CHECK(schur_multiplier(dihedral(6)).order() == 2);
  CHECK(schur_multiplier(dihedral(9)).invariants().empty());
}

TEST_CASE("cyclic groups have trivial multiplier") {
  for (long n : {2L, 5L, 8L, 12L}) {
    FiniteGroup g = cyclic(n);
    MultiplierData md = schur_multiplier(g);
    CHECK(md.invariants().empty());
    CHECK(homology_multiplier(g).empty());
    // Zu collapses to Bu, so the cover exponent degenerates to exp G
    CHECK(unitary_cover_exponent(md) == n);
  }
}
