#pragma once

#include <cstdint>
#include <vector>

#include "unicover/cocycle.hpp"
#include "unicover/group.hpp"

namespace unicov {

// Schur multiplier through the unitary pipeline: the classes of Zu modulo Bu
// at the working modulus realize the full complex-coefficient multiplier.
// Generators are unitary cocycles whose classes have exactly the listed
// orders.
struct MultiplierData {
  CocycleSpaces spaces;
  QuotientDecomp classes;  // Zu / Bu

  const std::vector<int64_t>& invariants() const { return classes.invariants; }
  int64_t exponent() const {
    return classes.invariants.empty() ? 1 : classes.invariants.back();
  }
  int64_t order() const;
  // component exponents of the class of a unitary mod-w cocycle
  std::vector<int64_t> class_decompose(const Cocycle& a) const;
  // unitary representative of the i-th invariant component
  Cocycle generator(size_t i) const;
};

MultiplierData schur_multiplier(const FiniteGroup& g);  // |G| <= 100

// exponent of the unitary cover, lcm(exp Zu, exp G)
int64_t unitary_cover_exponent(const MultiplierData& md);

// invariant factors of M(A) for abelian A: the pairwise gcd sum collapses to
// d_i with multiplicity (k - i) when d_1 | d_2 | ... | d_k
std::vector<int64_t> abelian_multiplier_invariants(const std::vector<long>& inv);

// independent oracle: H_2(G; Z) from the normalized bar resolution, computed
// as a lattice quotient at modulus |G| (which annihilates H_2); |G| <= 32
std::vector<int64_t> homology_multiplier(const FiniteGroup& g);

}  // namespace unicov
