#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unicover/group.hpp"
#include "unicover/modmatrix.hpp"

namespace unicov {

// Normalized 2-cocycle with values in Z/mod, written additively: the residue
// k stands for the root of unity exp(2 pi i k / mod). Only entries at
// (g, h) with g, h != 1 are stored; alpha(1, .) = alpha(., 1) = 0 by the
// normalization convention.
struct Cocycle {
  int n = 0;  // group order
  int64_t mod = 1;
  std::vector<int64_t> val;  // (n-1)^2 entries, row-major over (g-1, h-1)

  Cocycle() = default;
  Cocycle(int n_, int64_t mod_) : n(n_), mod(mod_), val(size_t(n_ - 1) * (n_ - 1), 0) {}

  int64_t at(Elt g, Elt h) const {
    if (g == 0 || h == 0) return 0;
    return val[size_t(g - 1) * (n - 1) + (h - 1)];
  }
  void set(Elt g, Elt h, int64_t v) {
    if (g == 0 || h == 0) throw std::invalid_argument("normalized entries are fixed at 0");
    val[size_t(g - 1) * (n - 1) + (h - 1)] = mod_reduce(v, mod);
  }
  SparseRow sparse() const { return make_sparse(val, mod); }
  static Cocycle from_sparse(int n, int64_t mod, const SparseRow& r);
  bool operator==(const Cocycle&) const = default;
};

// reduced coordinate index for (g, h), both != 1
inline int32_t pair_index(int n, Elt g, Elt h) {
  return int32_t(g - 1) * (n - 1) + (h - 1);
}

bool is_cocycle(const FiniteGroup& g, const Cocycle& a);
bool is_unitary(const FiniteGroup& g, const Cocycle& a);
// sum over j of alpha(x, x^j), zero for every x iff unitary
int64_t unitary_defect(const FiniteGroup& g, const Cocycle& a, Elt x);
Cocycle coboundary(const FiniteGroup& g, const std::vector<int64_t>& zeta, int64_t mod);
Cocycle scale_cocycle(const Cocycle& a, int64_t k);
Cocycle add_cocycles(const Cocycle& a, const Cocycle& b, int64_t bcoeff);

// cocycle identity rows for x restricted to a generating set; together with
// the normalization these imply the identity for all triples
std::vector<SparseRow> cocycle_constraint_rows(const FiniteGroup& g,
                                               const std::vector<Elt>& gens,
                                               int64_t mod);
// rows whose kernel adds the vanishing-defect (unitarity) condition
std::vector<SparseRow> unitarity_rows(const FiniteGroup& g, int64_t mod);
// coboundary of the indicator function of t (t != 1)
SparseRow coboundary_indicator_row(const FiniteGroup& g, Elt t, int64_t mod);

// All four cocycle spaces at the working modulus w = exp(G)^2 |G|. At this
// modulus the unitary classes Zu/Bu realize the full complex-coefficient
// multiplier, and Z2/B2 the full mod-w cohomology.
struct CocycleSpaces {
  const FiniteGroup* g = nullptr;
  int64_t base_mod = 1;  // exp(G) |G|
  int64_t w = 1;         // exp(G) base_mod
  Lattice z2, zu, b2, bu;
};
CocycleSpaces compute_spaces(const FiniteGroup& g);  // |G| <= 100
// same spaces at an overridden base modulus (w = exp(G) * base_mod); used by
// the modulus-stability checks and by class computations that must host
// kernel characters of an order not dividing the default w
CocycleSpaces compute_spaces_at(const FiniteGroup& g, int64_t base_mod);
// direct kernel computation in the full (n-1)^2 coordinate space; quadratic
// blowup makes it viable for small groups only, kept as a cross-check for
// the generator-slice path used by compute_spaces_at
CocycleSpaces compute_spaces_reference(const FiniteGroup& g, int64_t base_mod);

// express a cocycle given at modulus m dividing w as a mod-w cocycle
Cocycle embed_cocycle(const Cocycle& a, int64_t w);
// unitary representative of the embedded class: input at modulus m with
// exp(G) * m dividing w; the returned cocycle differs from the embedding by
// a coboundary and has vanishing defects
Cocycle unitarize(const FiniteGroup& g, const Cocycle& a, int64_t w);

// order of the class of a modulo the denominator lattice: least k with
// k a in {k b : b in denom}
int64_t class_order(const Lattice& denom, const SparseRow& a);
bool classes_equal(const Lattice& denom, const SparseRow& a, const SparseRow& b);
// least order of any representative a + b with b in adjust: least k | w
// with k a in k adjust
int64_t min_representative_order(const Lattice& adjust, const SparseRow& a);
// a representative of a + adjust whose order is exactly k (k as returned by
// min_representative_order; throws if no representative of order k exists)
SparseRow min_order_representative(const Lattice& adjust, const SparseRow& a, int64_t k);

Cocycle restriction(const FiniteGroup& g, const SubgroupGroup& s, const Cocycle& a);
Cocycle inflation(const FiniteGroup& g, const QuotientGroup& q, const Cocycle& aq);

// homomorphisms G -> Z/m as a lattice over the nonidentity coordinates
Lattice hom_lattice(const FiniteGroup& g, int64_t m);
// carry cocycle of the character chi (values of chi in [0, e)):
// tau(g, h) = (chi(g) + chi(h) - chi(gh)) / e, a mod-w cocycle
SparseRow bockstein_row(const FiniteGroup& g, const std::vector<int64_t>& chi, int64_t e);
// b2 extended by the carry cocycles of exp(G)-characters: the full set of
// mod-w cocycles whose complex-coefficient class is trivial
Lattice trivial_class_lattice(const CocycleSpaces& sp);

// hypotheses of the inflation criterion for a normal subgroup
bool vanishes_on_subgroup(const FiniteGroup& g, const Subgroup& n, const Cocycle& a);
bool conjugation_compatible(const FiniteGroup& g, const Subgroup& n, const Cocycle& a);
// power-conjugation identity satisfied by every unitary cocycle:
// o(x) a(x, y) = o(x) a(y, x^y) for all x, y
bool conjugation_power_check(const FiniteGroup& g, const Cocycle& a);

struct InflationSplit {
  bool hypotheses_ok = false;
  bool decomposed = false;
  int64_t witness_mod = 0;      // modulus at which the split was found
  Cocycle gamma;                // cocycle on the quotient
  std::vector<int64_t> zeta;    // length |G|, zeta[0] = 0
};
// attempt to write a as inflation(gamma) + coboundary(zeta) for the
// quotient by n; requires the two hypotheses above
InflationSplit inflation_split(const FiniteGroup& g, const Subgroup& n, const Cocycle& a);

// general solver for A x = b over Z/m, columns given sparsely
std::optional<std::vector<int64_t>> solve_linear(int eqs, int64_t mod,
                                                 const std::vector<SparseRow>& columns,
                                                 const SparseRow& b);

}  // namespace unicov
