#include "unicover/extension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unicov {

Elt CentralExtension::omega_elt(Elt x, Elt y) const {
  Elt p = total.mul(section[x], section[y]);
  Elt w = total.mul(p, total.inv(section[base.mul(x, y)]));
  if (!std::binary_search(kernel_members.begin(), kernel_members.end(), w))
    throw std::logic_error("section discrepancy left the kernel");
  return w;
}

CentralExtension wrap_extension(const FiniteGroup& total, const std::vector<Elt>& kernel_gens) {
  Subgroup k = subgroup_generated(total, kernel_gens);
  if (!is_central(total, k)) throw std::invalid_argument("extension kernel must be central");
  QuotientGroup q = quotient(total, k);
  CentralExtension e{total, std::move(q.group), k.members, {}, std::move(q.proj),
                     std::move(q.section)};
  for (long d : abelian_invariants(subgroup_as_group(k).group))
    e.kernel_invariants.push_back(d);
  return e;
}

int64_t extension_exponent(const CentralExtension& e) {
  int64_t m = 1;
  for (Elt a : e.kernel_members) m = std::lcm(m, int64_t(e.total.elt_order(a)));
  for (int x = 0; x < e.base.order(); ++x) {
    int64_t o = e.base.elt_order(Elt(x));
    Elt pw = e.total.pow(e.section[x], long(o));
    m = std::lcm(m, o * int64_t(e.total.elt_order(pw)));
  }
  return m;
}

CentralExtension omega_product(const FiniteGroup& g, int64_t w,
                               const std::vector<SparseRow>& hgens) {
  int n = g.order();
  int c = (n - 1) * (n - 1);
  for (const auto& r : hgens)
    if (!is_cocycle(g, Cocycle::from_sparse(n, w, r)))
      throw std::invalid_argument("omega product generators must be cocycles");
  Lattice h = howell(c, w, hgens);
  QuotientDecomp dec = quotient_invariants(h, zero_lattice(c, w));
  size_t r = dec.invariants.size();
  int64_t asize = 1;
  for (int64_t d : dec.invariants) asize *= d;
  if (asize * n > kMaxOrder)
    throw std::invalid_argument("omega product exceeds the group cap");

  // componentwise twist: the t-th generator has exact element order e_t, so
  // its values are multiples of w / e_t
  std::vector<std::vector<int64_t>> om(r);
  for (size_t t = 0; t < r; ++t) {
    int64_t f = w / dec.invariants[t];
    om[t] = make_dense(dec.generators[t], c);
    for (auto& v : om[t]) {
      if (v % f) throw std::logic_error("component generator not divisible by its cofactor");
      v /= f;
    }
  }
  std::vector<int64_t> stride(r, 1);
  for (size_t t = 1; t < r; ++t) stride[t] = stride[t - 1] * dec.invariants[t - 1];

  int tn = int(asize) * n;
  std::vector<Elt> table(size_t(tn) * tn);
  for (int64_t a = 0; a < asize; ++a)
    for (int x = 0; x < n; ++x)
      for (int64_t b = 0; b < asize; ++b)
        for (int y = 0; y < n; ++y) {
          int64_t s = 0;
          for (size_t t = 0; t < r; ++t) {
            int64_t at = (a / stride[t]) % dec.invariants[t];
            int64_t bt = (b / stride[t]) % dec.invariants[t];
            int64_t wt = (x && y) ? om[t][pair_index(n, Elt(x), Elt(y))] : 0;
            s += ((at + bt + wt) % dec.invariants[t]) * stride[t];
          }
          table[size_t(a * n + x) * tn + (b * n + y)] =
              Elt(s * n + g.mul(Elt(x), Elt(y)));
        }
  FiniteGroup total(std::move(table), tn, "omega(" + g.name() + ")");
  std::vector<Elt> kmem, proj(tn), sect(n);
  for (int64_t a = 0; a < asize; ++a) kmem.push_back(Elt(a * n));
  for (int i = 0; i < tn; ++i) proj[i] = Elt(i % n);
  for (int x = 0; x < n; ++x) sect[x] = Elt(x);
  std::vector<int64_t> kinv = dec.invariants;
  return CentralExtension{std::move(total), g, std::move(kmem), std::move(kinv),
                          std::move(proj), std::move(sect)};
}

namespace {

std::vector<SparseRow> section_reps(const MultiplierData& md) {
  Lattice triv = trivial_class_lattice(md.spaces);
  std::vector<SparseRow> reps;
  for (size_t i = 0; i < md.invariants().size(); ++i)
    reps.push_back(min_order_representative(triv, md.classes.generators[i],
                                            md.invariants()[i]));
  if (!reps.empty()) {
    Lattice span = howell(triv.ambient, triv.mod, reps);
    if (lattice_intersect(span, triv).rank())
      throw std::logic_error("section span meets the trivial classes");
  }
  return reps;
}

}  // namespace

SectionSearch schur_section_search(const FiniteGroup& g, const MultiplierData& md) {
  SectionSearch out;
  out.w = md.spaces.w;
  try {
    out.reps = section_reps(md);
    return out;
  } catch (const std::invalid_argument&) {
    // retry once at twice the base modulus; the carry lattice already hosts
    // representatives of every order at the default modulus, so a second
    // failure signals a bug rather than an input condition
  }
  MultiplierData md2;
  md2.spaces = compute_spaces_at(g, 2 * md.spaces.base_mod);
  md2.classes = quotient_invariants(md2.spaces.zu, md2.spaces.bu);
  if (md2.invariants() != md.invariants())
    throw std::logic_error("doubling the modulus changed the multiplier");
  SectionSearch out2;
  out2.w = md2.spaces.w;
  out2.doubled = true;
  out2.reps = section_reps(md2);
  return out2;
}

CentralExtension schur_cover(const FiniteGroup& g, const MultiplierData& md) {
  SectionSearch s = schur_section_search(g, md);
  CentralExtension e = omega_product(g, s.w, s.reps);
  e.total.set_name("cover(" + g.name() + ")");
  return e;
}

CentralExtension mu_cover(const FiniteGroup& g, const MultiplierData& md, size_t class_index) {
  int64_t d = md.invariants().at(class_index);
  Lattice triv = trivial_class_lattice(md.spaces);
  SparseRow rep = min_order_representative(triv, md.classes.generators[class_index], d);
  CentralExtension e = omega_product(g, md.spaces.w, {rep});
  e.total.set_name("mucover(" + g.name() + "," + std::to_string(class_index) + ")");
  return e;
}

int64_t min_unitary_representative_order(const MultiplierData& md, size_t class_index) {
  return min_representative_order(md.spaces.bu, md.classes.generators.at(class_index));
}

std::vector<int64_t> standard_map_image(const CentralExtension& e, const MultiplierData& md) {
  const FiniteGroup& b = e.base;
  if (md.spaces.g->order() != b.order())
    throw std::invalid_argument("multiplier data does not match the base");
  int an = int(e.kernel_members.size());
  if (an == 1 || md.invariants().empty()) return {};
  Subgroup ksub = e.kernel();
  SubgroupGroup ag = subgroup_as_group(ksub);
  int64_t ea = ag.group.exponent();
  std::vector<int> loc(e.total.order(), -1);
  for (int i = 0; i < an; ++i) loc[ag.embed[i]] = i;

  // host modulus must contain mu_{ea} with an exp(B)-divisible cofactor
  const MultiplierData* use = &md;
  MultiplierData alt;
  if (md.spaces.w % ea || (md.spaces.w / ea) % b.exponent()) {
    alt.spaces = compute_spaces_at(b, std::lcm(md.spaces.base_mod, ea));
    alt.classes = quotient_invariants(alt.spaces.zu, alt.spaces.bu);
    use = &alt;
  }
  int n = b.order();
  const auto& inv = use->invariants();
  int64_t dmax = inv.back();
  int rr = int(inv.size());
  Lattice homs = hom_lattice(ag.group, ea);
  std::vector<SparseRow> rows;
  for (const auto& chi : homs.rows) {
    std::vector<int64_t> chid = make_dense(chi, an - 1);
    Cocycle c0(n, ea);
    for (Elt x = 1; x < n; ++x)
      for (Elt y = 1; y < n; ++y) {
        int l = loc[e.omega_elt(x, y)];
        if (l > 0) c0.set(x, y, chid[l - 1]);
      }
    Cocycle cu = unitarize(b, c0, use->spaces.w);
    auto coords = use->classes.decompose(use->spaces.zu, cu.sparse());
    SparseRow row;
    for (int t = 0; t < rr; ++t) {
      int64_t v = mod_reduce(coords[t] * (dmax / inv[t]), dmax);
      if (v) row.push_back({t, v});
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  Lattice img = howell(rr, dmax, std::move(rows));
  return quotient_invariants(img, zero_lattice(rr, dmax)).invariants;
}

bool plp_check(const CentralExtension& e, const MultiplierData& md) {
  std::vector<int64_t> img = standard_map_image(e, md);
  bool onto = (img == md.invariants());
  Subgroup der = derived_subgroup(e.total);
  int64_t meet = 0;
  for (Elt a : e.kernel_members)
    if (der.contains(a)) ++meet;
  // |im eta| = |A meet E'| always, so the two criteria must agree
  if (onto != (meet == md.order()))
    throw std::logic_error("standard map image disagrees with |A meet E'|");
  return onto;
}

Subgroup generator_subextension(const CentralExtension& e) {
  std::vector<Elt> lift;
  for (Elt s : generating_set(e.base)) lift.push_back(e.section[s]);
  Subgroup x = subgroup_generated(e.total, lift);
  if (!(derived_subgroup_of(e.total, x) == derived_subgroup(e.total)))
    throw std::logic_error("generator subextension misses the derived subgroup");
  return x;
}

DualPerp dual_perp(const Lattice& h, const Lattice& k) {
  DualPerp out;
  out.h_decomp = quotient_invariants(h, zero_lattice(h.ambient, h.mod));
  out.h_invariants = out.h_decomp.invariants;
  int r = int(out.h_invariants.size());
  if (r == 0) {
    if (k.rank()) throw std::invalid_argument("k is not inside h");
    out.perp_scaled = zero_lattice(0, 1);
    return out;
  }
  int64_t ee = out.h_invariants.back();
  out.exp_e = ee;
  // chi(K) = 1 in scaled coordinates: sum_t x_t a_t = 0 mod E for the
  // h-decompositions a of K's generators
  std::vector<SparseRow> pair_rows;
  for (const auto& kr : k.rows) {
    auto coords = out.h_decomp.decompose(h, kr);
    SparseRow row;
    for (int t = 0; t < r; ++t) {
      int64_t v = mod_reduce(coords[t], ee);
      if (v) row.push_back({t, v});
    }
    if (!row.empty()) pair_rows.push_back(std::move(row));
  }
  Lattice orth = kernel_of_rows(r, ee, std::move(pair_rows));
  std::vector<SparseRow> grid;
  for (int t = 0; t < r; ++t) grid.push_back({{t, ee / out.h_invariants[t]}});
  out.perp_scaled = lattice_intersect(orth, howell(r, ee, std::move(grid)));
  return out;
}

PerpQuotientReport perp_quotient(const FiniteGroup& g, const Subgroup& nsub,
                                 const std::vector<SparseRow>& hgens,
                                 const std::vector<SparseRow>& lgens) {
  PerpQuotientReport rep;
  QuotientGroup q = quotient(g, nsub);
  int gn = g.order(), qn = q.group.order();
  int cg = (gn - 1) * (gn - 1), cq = (qn - 1) * (qn - 1);
  int64_t e = g.exponent();
  int64_t w = e * e * gn;
  for (const auto& r : hgens)
    if (!is_cocycle(g, Cocycle::from_sparse(gn, w, r)))
      throw std::invalid_argument("hgens must be cocycles on g");
  for (const auto& r : lgens)
    if (!is_cocycle(q.group, Cocycle::from_sparse(qn, w, r)))
      throw std::invalid_argument("lgens must be cocycles on the quotient");
  Lattice h = howell(cg, w, hgens);
  Lattice l = howell(cq, w, lgens);
  auto inflate_rows = [&](const Lattice& src) {
    std::vector<SparseRow> out;
    for (const auto& r : src.rows)
      out.push_back(inflation(g, q, Cocycle::from_sparse(qn, w, r)).sparse());
    return out;
  };
  Lattice lstar = howell(cg, w, inflate_rows(l));
  Lattice z2q = kernel_of_rows(
      cq, w, cocycle_constraint_rows(q.group, generating_set(q.group), w));
  Lattice z2qstar = howell(cg, w, inflate_rows(z2q));
  Lattice k = lattice_intersect(h, lstar);
  rep.hypothesis_ok = (lattice_intersect(h, z2qstar) == k);
  rep.lstar_in_h = h.contains_lattice(lstar);

  CentralExtension left = omega_product(q.group, w, l.rows);
  CentralExtension right = omega_product(g, w, h.rows);

  // Kperp as kernel members of the right product; the decomposition of H is
  // shared because both sides canonicalize the same lattice
  DualPerp dp = dual_perp(h, k);
  int rr = int(dp.h_invariants.size());
  std::vector<int64_t> stride(rr, 1);
  for (int t = 1; t < rr; ++t) stride[t] = stride[t - 1] * dp.h_invariants[t - 1];
  std::vector<Elt> mgens;
  for (const auto& pt : lattice_points(dp.perp_scaled, 4096)) {
    int64_t aidx = 0;
    for (int t = 0; t < rr; ++t)
      aidx += (pt[t] / (dp.exp_e / dp.h_invariants[t])) * stride[t];
    mgens.push_back(Elt(aidx * gn));
  }
  for (Elt x : nsub.members) mgens.push_back(x);  // (0, n) sits at index n
  Subgroup m = subgroup_generated(right.total, mgens);
  if (!is_normal(right.total, m))
    throw std::logic_error("Kperp Ndot fails normality");
  QuotientGroup rq = quotient(right.total, m);
  rep.left_order = left.total.order();
  rep.right_order = rq.group.order();
  rep.surjection_found = surjective_hom_exists(left.total, rq.group);
  if (rep.lstar_in_h && rep.left_order == rep.right_order &&
      rep.left_order <= 128)
    rep.iso = is_isomorphic(left.total, rq.group);
  return rep;
}

}  // namespace unicov
