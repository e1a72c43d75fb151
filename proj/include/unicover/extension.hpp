#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unicover/cocycle.hpp"
#include "unicover/group.hpp"
#include "unicover/multiplier.hpp"

namespace unicov {

// Central extension A -> E -> B with a distinguished normalized section
// (section[0] = 0). The kernel is stored by member list so the struct stays
// safely copyable.
struct CentralExtension {
  FiniteGroup total;
  FiniteGroup base;
  std::vector<Elt> kernel_members;         // sorted, central in total
  std::vector<int64_t> kernel_invariants;  // invariant factors of the kernel
  std::vector<Elt> proj;                   // total -> base
  std::vector<Elt> section;                // base -> total

  Subgroup kernel() const { return subgroup_from_members(total, kernel_members); }
  // phi(x) phi(y) phi(xy)^{-1}, always a kernel member
  Elt omega_elt(Elt x, Elt y) const;
};

// view an explicit group as a central extension by the subgroup the given
// elements generate; rejects non-central kernels
CentralExtension wrap_extension(const FiniteGroup& total, const std::vector<Elt>& kernel_gens);

// exp E = lcm{exp A, o(x) o(phi(x)^{o(x)})} over the base elements; the
// element order of phi(x) is exactly o(x) o(phi(x)^{o(x)})
int64_t extension_exponent(const CentralExtension& e);

// group on A x G twisted by the classes of H = <hgens> <= Z^2(G, Z/w): the
// kernel coordinates are the dual of H under its invariant decomposition and
// the twist stores alpha(g, h) componentwise. Generators must be mod-w
// cocycles and |A| |G| must fit the group cap.
CentralExtension omega_product(const FiniteGroup& g, int64_t w,
                               const std::vector<SparseRow>& hgens);

// representatives of the multiplier generator classes with element order
// equal to the class order. Such representatives are generally not unitary
// (no order-2 representative of the C2 x C2 generator class has vanishing
// defects), so they are searched over the full trivial-class lattice; the
// span meets that lattice trivially, which makes the omega product a cover
// of minimal order.
struct SectionSearch {
  std::vector<SparseRow> reps;
  int64_t w = 1;        // modulus the representatives live at
  bool doubled = false; // true when the doubled-modulus retry was needed
};
SectionSearch schur_section_search(const FiniteGroup& g, const MultiplierData& md);
CentralExtension schur_cover(const FiniteGroup& g, const MultiplierData& md);

// cyclic-kernel cover for one multiplier class: kernel order equals the
// class order, kernel lies inside the derived subgroup
CentralExtension mu_cover(const FiniteGroup& g, const MultiplierData& md, size_t class_index);

// least element order among the unitary representatives of a class
int64_t min_unitary_representative_order(const MultiplierData& md, size_t class_index);

// standard map eta: A^ -> M(B), lambda -> [lambda o omega]: invariant
// factors of the image subgroup; md_base must be the multiplier of e.base
std::vector<int64_t> standard_map_image(const CentralExtension& e, const MultiplierData& md_base);
// image of eta equals all of M(B); cross-checked against |A meet E'|
bool plp_check(const CentralExtension& e, const MultiplierData& md_base);

// X = <section images of a base generating set>; X' = E' always holds, and
// X = E when the extension is a cover by a subgroup of E'
Subgroup generator_subextension(const CentralExtension& e);

// dual-group bookkeeping for finite subgroups K <= H of (Z/M)^n. Characters
// of H are stored in scaled coordinates: chi <-> x with x_t = chi(h_t) E/e_t
// in Z/E, where e_t are the invariant factors of H and E the largest.
struct DualPerp {
  std::vector<int64_t> h_invariants;
  QuotientDecomp h_decomp;
  int64_t exp_e = 1;
  Lattice perp_scaled;  // {chi : chi(K) = 1} in the scaled coordinates
};
DualPerp dual_perp(const Lattice& h, const Lattice& k);

// duality-inflation comparison for N normal in G, H <= Z^2(G), L <= Z^2(G/N),
// all at the working modulus of G: checks H meet Z^2(G/N)* = H meet L*,
// materializes both omega products, and verifies that L~ x| (G/N) surjects
// onto (H~ x| G) / (Kperp Ndot) with K = H meet L* (an isomorphism when
// L* <= H)
struct PerpQuotientReport {
  bool hypothesis_ok = false;
  bool lstar_in_h = false;
  int64_t left_order = 0;   // |L~ x| (G/N)|
  int64_t right_order = 0;  // |(H~ x| G) / (Kperp Ndot)|
  bool surjection_found = false;
  bool iso = false;
};
PerpQuotientReport perp_quotient(const FiniteGroup& g, const Subgroup& n,
                                 const std::vector<SparseRow>& hgens,
                                 const std::vector<SparseRow>& lgens);

}  // namespace unicov
