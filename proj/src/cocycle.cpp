#include "unicover/cocycle.hpp"

#include <algorithm>
#include <numeric>

namespace unicov {

namespace {

// sort by column and merge duplicate indices
SparseRow merge_terms(std::vector<std::pair<int32_t, int64_t>> terms, int64_t mod) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto [c, v] : terms) {
    if (!out.empty() && out.back().first == c) {
      out.back().second = mod_reduce(out.back().second + v, mod);
    } else {
      out.push_back({c, mod_reduce(v, mod)});
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return e.second == 0; }),
            out.end());
  return out;
}

std::vector<int64_t> divisors_of(int64_t n) {
  std::vector<int64_t> d;
  for (int64_t i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

Cocycle Cocycle::from_sparse(int n, int64_t mod, const SparseRow& r) {
  Cocycle a(n, mod);
  for (auto [c, v] : r) a.val[c] = mod_reduce(v, mod);
  return a;
}

bool is_cocycle(const FiniteGroup& g, const Cocycle& a) {
  int n = g.order();
  for (Elt x = 1; x < n; ++x)
    for (Elt y = 1; y < n; ++y) {
      Elt xy = g.mul(x, y);
      for (Elt z = 1; z < n; ++z) {
        int64_t lhs = a.at(x, y) + a.at(xy, z);
        int64_t rhs = a.at(x, g.mul(y, z)) + a.at(y, z);
        if (mod_reduce(lhs - rhs, a.mod)) return false;
      }
    }
  return true;
}

int64_t unitary_defect(const FiniteGroup& g, const Cocycle& a, Elt x) {
  int64_t s = 0;
  Elt p = x;
  while (p != 0) {  // j = 1 .. ord(x), the last term is alpha(x, 1) = 0
    s = mod_reduce(s + a.at(x, p), a.mod);
    p = g.mul(p, x);
  }
  return s;
}

bool is_unitary(const FiniteGroup& g, const Cocycle& a) {
  for (Elt x = 1; x < g.order(); ++x)
    if (unitary_defect(g, a, x)) return false;
  return true;
}

Cocycle coboundary(const FiniteGroup& g, const std::vector<int64_t>& zeta, int64_t mod) {
  if (int(zeta.size()) != g.order()) throw std::invalid_argument("zeta size mismatch");
  if (mod_reduce(zeta[0], mod)) throw std::invalid_argument("zeta must vanish at the identity");
  Cocycle a(g.order(), mod);
  for (Elt x = 1; x < g.order(); ++x)
    for (Elt y = 1; y < g.order(); ++y)
      a.set(x, y, zeta[x] + zeta[y] - zeta[g.mul(x, y)]);
  return a;
}

Cocycle scale_cocycle(const Cocycle& a, int64_t k) {
  Cocycle out = a;
  for (auto& v : out.val) v = mod_reduce(v * mod_reduce(k, a.mod), a.mod);
  return out;
}

Cocycle add_cocycles(const Cocycle& a, const Cocycle& b, int64_t bcoeff) {
  if (a.n != b.n || a.mod != b.mod) throw std::invalid_argument("cocycle shape mismatch");
  Cocycle out = a;
  int64_t c = mod_reduce(bcoeff, a.mod);
  for (size_t i = 0; i < out.val.size(); ++i)
    out.val[i] = mod_reduce(out.val[i] + c * b.val[i], a.mod);
  return out;
}

std::vector<SparseRow> cocycle_constraint_rows(const FiniteGroup& g,
                                               const std::vector<Elt>& gens,
                                               int64_t mod) {
  int n = g.order();
  std::vector<SparseRow> rows;
  rows.reserve(gens.size() * size_t(n - 1) * (n - 1));
  for (Elt s : gens) {
    if (s == 0) continue;
    for (Elt y = 1; y < n; ++y) {
      Elt sy = g.mul(s, y);
      for (Elt z = 1; z < n; ++z) {
        Elt yz = g.mul(y, z);
        std::vector<std::pair<int32_t, int64_t>> t;
        t.push_back({pair_index(n, s, y), 1});
        if (sy != 0) t.push_back({pair_index(n, sy, z), 1});
        if (yz != 0) t.push_back({pair_index(n, s, yz), -1});
        t.push_back({pair_index(n, y, z), -1});
        SparseRow r = merge_terms(std::move(t), mod);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

std::vector<SparseRow> unitarity_rows(const FiniteGroup& g, int64_t mod) {
  int n = g.order();
  std::vector<SparseRow> rows;
  for (Elt x = 1; x < n; ++x) {
    std::vector<std::pair<int32_t, int64_t>> t;
    Elt p = x;
    while (p != 0) {
      t.push_back({pair_index(n, x, p), 1});
      p = g.mul(p, x);
    }
    SparseRow r = merge_terms(std::move(t), mod);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return rows;
}

SparseRow coboundary_indicator_row(const FiniteGroup& g, Elt t, int64_t mod) {
  if (t == 0) throw std::invalid_argument("indicator at the identity is excluded");
  int n = g.order();
  std::vector<std::pair<int32_t, int64_t>> terms;
  for (Elt y = 1; y < n; ++y) terms.push_back({pair_index(n, t, y), 1});
  for (Elt x = 1; x < n; ++x) terms.push_back({pair_index(n, x, t), 1});
  for (Elt x = 1; x < n; ++x) {
    Elt y = g.mul(g.inv(x), t);
    if (y != 0) terms.push_back({pair_index(n, x, y), -1});
  }
  return merge_terms(std::move(terms), mod);
}

namespace {

CocycleSpaces spaces_shell(const FiniteGroup& g, int64_t base_mod) {
  if (g.order() > 100)
    throw std::invalid_argument("cocycle spaces capped at group order 100");
  if (base_mod < 1) throw std::invalid_argument("base modulus must be positive");
  CocycleSpaces sp;
  sp.g = &g;
  sp.base_mod = base_mod;
  sp.w = g.exponent() * base_mod;
  return sp;
}

void fill_coboundaries(const FiniteGroup& g, CocycleSpaces& sp) {
  int n = g.order();
  int c = (n - 1) * (n - 1);
  std::vector<SparseRow> db, dbu;
  for (Elt t = 1; t < n; ++t) {
    SparseRow r = coboundary_indicator_row(g, t, sp.w);
    dbu.push_back(scale_row(r, sp.w / g.elt_order(t), sp.w));
    db.push_back(std::move(r));
  }
  sp.b2 = howell(c, sp.w, std::move(db));
  sp.bu = howell(c, sp.w, std::move(dbu));
}

// Every normalized cocycle is determined by its values on gens x G: a BFS
// spanning tree of left factorizations x = s x' turns the identity with
// (s, x', y) into the recursion a(x, y) = a(s, x'y) + a(x', y) - a(s, x').
// Kernels are computed in the slice coordinates (far fewer of them) and the
// basis is expanded back to full coordinates afterwards.
struct SlicePlan {
  const FiniteGroup* g;
  int n;
  std::vector<Elt> gens;
  std::vector<int> gen_index;        // element -> position in gens, -1 otherwise
  std::vector<Elt> expansion_order;  // non-identity, word length never decreasing
  std::vector<Elt> label, parent;    // x = label[x] * parent[x]

  int dim() const { return int(gens.size()) * (n - 1); }
  int32_t slot(int gi, Elt y) const { return int32_t(gi * (n - 1) + y - 1); }
};

SlicePlan make_slice_plan(const FiniteGroup& g, std::vector<Elt> gens) {
  SlicePlan p;
  p.g = &g;
  p.n = g.order();
  p.gens = std::move(gens);
  p.gen_index.assign(p.n, -1);
  for (size_t i = 0; i < p.gens.size(); ++i) {
    if (p.gens[i] == 0 || p.gen_index[p.gens[i]] >= 0)
      throw std::invalid_argument("slice plan needs distinct nontrivial generators");
    p.gen_index[p.gens[i]] = int(i);
  }
  p.label.assign(p.n, 0);
  p.parent.assign(p.n, 0);
  std::vector<char> seen(p.n, 0);
  seen[0] = 1;
  std::vector<Elt> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (Elt s : p.gens) {
      Elt y = g.mul(s, queue[qi]);
      if (seen[y]) continue;
      seen[y] = 1;
      p.label[y] = s;
      p.parent[y] = queue[qi];
      p.expansion_order.push_back(y);
      queue.push_back(y);
    }
  }
  if (p.expansion_order.size() + 1 != size_t(p.n))
    throw std::logic_error("generating set does not generate");
  return p;
}

// slice coordinates of a(x, y) for every pair, built along the tree
std::vector<int64_t> slice_expansion_table(const SlicePlan& p) {
  const FiniteGroup& g = *p.g;
  int n = p.n, d = p.dim();
  std::vector<int64_t> table(size_t(n - 1) * (n - 1) * d, 0);
  auto row = [&](Elt x, Elt y) { return table.begin() + size_t(pair_index(n, x, y)) * d; };
  for (Elt x : p.expansion_order) {
    if (p.parent[x] == 0) {
      int gi = p.gen_index[x];
      for (Elt y = 1; y < n; ++y) row(x, y)[p.slot(gi, y)] = 1;
      continue;
    }
    Elt s = p.label[x], xp = p.parent[x];
    int gi = p.gen_index[s];
    for (Elt y = 1; y < n; ++y) {
      auto dst = row(x, y);
      auto src = row(xp, y);
      std::copy(src, src + d, dst);
      Elt xpy = g.mul(xp, y);
      if (xpy != 0) dst[p.slot(gi, xpy)] += 1;
      dst[p.slot(gi, xp)] -= 1;
    }
  }
  return table;
}

// mod-m row echelon over dense rows; all combines are unimodular, so the
// pivot rows generate exactly the lattice spanned by the inserted rows
struct DenseEchelon {
  int width;
  int64_t mod;
  std::vector<std::vector<int64_t>> piv;  // indexed by leading column

  DenseEchelon(int w, int64_t m) : width(w), mod(m), piv(w) {}

  // entries of r may be unreduced but bounded away from overflow; consumed
  void insert(std::vector<int64_t>& r) {
    for (int j = 0; j < width; ++j) {
      int64_t x = mod_reduce(r[j], mod);
      r[j] = x;
      if (x == 0) continue;
      if (piv[j].empty()) {
        int64_t u = unit_for(x, mod);
        std::vector<int64_t> row(width, 0);
        for (int t = j; t < width; ++t) row[t] = mod_reduce(mod_reduce(r[t], mod) * u, mod);
        piv[j] = std::move(row);
        return;
      }
      auto& p = piv[j];
      int64_t d = p[j];
      if (x % d == 0) {
        // values stay below 2^51 across a full walk, reduce lazily
        int64_t q = x / d;
        for (int t = j + 1; t < width; ++t) r[t] -= q * p[t];
        r[j] = 0;
      } else {
        for (int t = j; t < width; ++t) r[t] = mod_reduce(r[t], mod);
        x = r[j];
        auto e = xgcd(d, x);
        std::vector<int64_t> np(width, 0);
        for (int t = j; t < width; ++t) np[t] = mod_reduce(e.a * p[t] + e.b * r[t], mod);
        if (np[j] != e.g) throw std::logic_error("echelon combine lost its pivot");
        int64_t qd = d / e.g, qx = x / e.g;
        for (int t = j + 1; t < width; ++t) r[t] = mod_reduce(qd * r[t] - qx * p[t], mod);
        r[j] = 0;
        p = std::move(np);
      }
    }
  }

  std::vector<SparseRow> basis() const {
    std::vector<SparseRow> rows;
    for (int j = 0; j < width; ++j)
      if (!piv[j].empty()) rows.push_back(make_sparse(piv[j], mod));
    return rows;
  }
};

// constraint rows of the generator identities written in slice coordinates
void insert_constraint_slices(const SlicePlan& p, const std::vector<int64_t>& table,
                              DenseEchelon& ech) {
  const FiniteGroup& g = *p.g;
  int n = p.n, d = p.dim();
  auto trow = [&](Elt x, Elt y) { return table.begin() + size_t(pair_index(n, x, y)) * d; };
  std::vector<int64_t> r(d);
  for (size_t si = 0; si < p.gens.size(); ++si) {
    Elt s = p.gens[si];
    for (Elt y = 1; y < n; ++y) {
      Elt sy = g.mul(s, y);
      for (Elt z = 1; z < n; ++z) {
        Elt yz = g.mul(y, z);
        auto a = trow(y, z);
        if (sy != 0) {
          auto b = trow(sy, z);
          for (int t = 0; t < d; ++t) r[t] = b[t] - a[t];
        } else {
          for (int t = 0; t < d; ++t) r[t] = -a[t];
        }
        r[p.slot(int(si), y)] += 1;
        if (yz != 0) r[p.slot(int(si), yz)] -= 1;
        ech.insert(r);
      }
    }
  }
}

void insert_unitarity_slices(const SlicePlan& p, const std::vector<int64_t>& table,
                             DenseEchelon& ech) {
  const FiniteGroup& g = *p.g;
  int n = p.n, d = p.dim();
  auto trow = [&](Elt x, Elt y) { return table.begin() + size_t(pair_index(n, x, y)) * d; };
  std::vector<int64_t> r(d);
  for (Elt x = 1; x < n; ++x) {
    std::fill(r.begin(), r.end(), 0);
    for (Elt q = x; q != 0; q = g.mul(q, x)) {
      auto a = trow(x, q);
      for (int t = 0; t < d; ++t) r[t] += a[t];
    }
    ech.insert(r);
  }
}

// expand a kernel basis of consistent slices to full-coordinate cocycles
Lattice expand_slice_kernel(const SlicePlan& p, const DenseEchelon& constraints,
                            int64_t w) {
  const FiniteGroup& g = *p.g;
  int n = p.n, d = p.dim();
  int c = (n - 1) * (n - 1);
  Lattice consistent = kernel_of_lattice(howell(d, w, constraints.basis()));
  std::vector<SparseRow> expanded;
  expanded.reserve(consistent.rows.size());
  std::vector<int64_t> amb(c);
  for (const auto& krow : consistent.rows) {
    std::vector<int64_t> v = make_dense(krow, d);
    auto vat = [&](int gi, Elt u) { return u == 0 ? 0 : v[p.slot(gi, u)]; };
    for (Elt x : p.expansion_order) {
      if (p.parent[x] == 0) {
        int gi = p.gen_index[x];
        for (Elt y = 1; y < n; ++y) amb[pair_index(n, x, y)] = v[p.slot(gi, y)];
        continue;
      }
      Elt s = p.label[x], xp = p.parent[x];
      int gi = p.gen_index[s];
      for (Elt y = 1; y < n; ++y) {
        int64_t t = amb[pair_index(n, xp, y)] + vat(gi, g.mul(xp, y)) - vat(gi, xp);
        amb[pair_index(n, x, y)] = mod_reduce(t, w);
      }
    }
    expanded.push_back(make_sparse(amb, w));
  }
  return howell(c, w, std::move(expanded));
}

}  // namespace

CocycleSpaces compute_spaces_at(const FiniteGroup& g, int64_t base_mod) {
  CocycleSpaces sp = spaces_shell(g, base_mod);
  int n = g.order();
  if (n == 1) {
    sp.z2 = sp.zu = sp.b2 = sp.bu = zero_lattice(0, sp.w);
    return sp;
  }
  SlicePlan plan = make_slice_plan(g, generating_set(g));
  std::vector<int64_t> table = slice_expansion_table(plan);
  DenseEchelon cons(plan.dim(), sp.w);
  insert_constraint_slices(plan, table, cons);
  DenseEchelon consu = cons;
  insert_unitarity_slices(plan, table, consu);
  sp.z2 = expand_slice_kernel(plan, cons, sp.w);
  sp.zu = expand_slice_kernel(plan, consu, sp.w);
  fill_coboundaries(g, sp);
  return sp;
}

CocycleSpaces compute_spaces_reference(const FiniteGroup& g, int64_t base_mod) {
  CocycleSpaces sp = spaces_shell(g, base_mod);
  int n = g.order();
  int c = (n - 1) * (n - 1);
  auto gens = generating_set(g);
  // the row space of the constraint system is shared between z2 and zu
  Lattice coc = howell(c, sp.w, cocycle_constraint_rows(g, gens, sp.w));
  sp.z2 = kernel_of_lattice(coc);
  HowellBuilder ub(coc);
  ub.add_batch(unitarity_rows(g, sp.w));
  sp.zu = kernel_of_lattice(ub.finish());
  fill_coboundaries(g, sp);
  return sp;
}

CocycleSpaces compute_spaces(const FiniteGroup& g) {
  return compute_spaces_at(g, g.exponent() * int64_t(g.order()));
}

Cocycle embed_cocycle(const Cocycle& a, int64_t w) {
  if (w % a.mod) throw std::invalid_argument("embedding modulus must be a multiple");
  int64_t f = w / a.mod;
  Cocycle out(a.n, w);
  for (size_t i = 0; i < a.val.size(); ++i) out.val[i] = a.val[i] * f;
  return out;
}

Cocycle unitarize(const FiniteGroup& g, const Cocycle& a, int64_t w) {
  Cocycle b = embed_cocycle(a, w);
  int n = g.order();
  std::vector<int64_t> xi(n, 0);
  for (Elt x = 1; x < n; ++x) {
    int64_t s = unitary_defect(g, b, x);
    int64_t o = g.elt_order(x);
    if (s % o)
      throw std::invalid_argument("defect not divisible by the element order; "
                                  "embed with a factor divisible by exp(G)");
    xi[x] = s / o;
  }
  Cocycle out = add_cocycles(b, coboundary(g, xi, w), -1);
  return out;
}

int64_t class_order(const Lattice& denom, const SparseRow& a) {
  for (int64_t k : divisors_of(denom.mod))
    if (denom.contains(scale_row(a, k, denom.mod))) return k;
  throw std::logic_error("class order exceeds the modulus");
}

bool classes_equal(const Lattice& denom, const SparseRow& a, const SparseRow& b) {
  return denom.contains(add_scaled(a, b, denom.mod - 1, denom.mod));
}

int64_t min_representative_order(const Lattice& adjust, const SparseRow& a) {
  for (int64_t k : divisors_of(adjust.mod)) {
    std::vector<SparseRow> scaled;
    scaled.reserve(adjust.rows.size());
    for (const auto& r : adjust.rows) scaled.push_back(scale_row(r, k, adjust.mod));
    Lattice lk = howell(adjust.ambient, adjust.mod, std::move(scaled));
    if (lk.contains(scale_row(a, k, adjust.mod))) return k;
  }
  throw std::logic_error("representative order exceeds the modulus");
}

SparseRow min_order_representative(const Lattice& adjust, const SparseRow& a, int64_t k) {
  int64_t m = adjust.mod;
  std::vector<SparseRow> cols;
  cols.reserve(adjust.rows.size());
  for (const auto& r : adjust.rows) cols.push_back(scale_row(r, k, m));
  auto x = solve_linear(adjust.ambient, m, cols, scale_row(a, m - k, m));
  if (!x) throw std::invalid_argument("no representative of the requested order");
  SparseRow rep = a;
  for (size_t j = 0; j < cols.size(); ++j)
    if ((*x)[j]) rep = add_scaled(rep, adjust.rows[j], (*x)[j], m);
  if (!scale_row(rep, k, m).empty())
    throw std::logic_error("representative order mismatch");
  return rep;
}

Cocycle restriction(const FiniteGroup& g, const SubgroupGroup& s, const Cocycle& a) {
  (void)g;
  Cocycle out(s.group.order(), a.mod);
  for (Elt x = 1; x < s.group.order(); ++x)
    for (Elt y = 1; y < s.group.order(); ++y)
      out.set(x, y, a.at(s.embed[x], s.embed[y]));
  return out;
}

Cocycle inflation(const FiniteGroup& g, const QuotientGroup& q, const Cocycle& aq) {
  Cocycle out(g.order(), aq.mod);
  for (Elt x = 1; x < g.order(); ++x)
    for (Elt y = 1; y < g.order(); ++y) {
      int64_t v = aq.at(q.proj[x], q.proj[y]);
      if (v) out.set(x, y, v);
    }
  return out;
}

Lattice hom_lattice(const FiniteGroup& g, int64_t m) {
  int n = g.order();
  auto gens = generating_set(g);
  std::vector<SparseRow> rows;
  for (Elt s : gens)
    for (Elt h = 1; h < n; ++h) {
      Elt sh = g.mul(s, h);
      std::vector<std::pair<int32_t, int64_t>> t;
      t.push_back({int32_t(s - 1), 1});
      t.push_back({int32_t(h - 1), 1});
      if (sh != 0) t.push_back({int32_t(sh - 1), -1});
      SparseRow r = merge_terms(std::move(t), m);
      if (!r.empty()) rows.push_back(std::move(r));
    }
  return kernel_of_rows(n - 1, m, rows);
}

SparseRow bockstein_row(const FiniteGroup& g, const std::vector<int64_t>& chi, int64_t e) {
  int n = g.order();
  if (int(chi.size()) != n - 1) throw std::invalid_argument("chi size mismatch");
  auto cv = [&](Elt x) { return x == 0 ? int64_t(0) : mod_reduce(chi[x - 1], e); };
  SparseRow out;
  for (Elt x = 1; x < n; ++x)
    for (Elt y = 1; y < n; ++y) {
      int64_t s = cv(x) + cv(y) - cv(g.mul(x, y));
      if (s % e) throw std::invalid_argument("chi is not a homomorphism mod e");
      if (s) out.push_back({pair_index(n, x, y), s / e});
    }
  std::sort(out.begin(), out.end());
  return out;
}

Lattice trivial_class_lattice(const CocycleSpaces& sp) {
  const FiniteGroup& g = *sp.g;
  int64_t e = g.exponent();
  Lattice homs = hom_lattice(g, e);
  HowellBuilder b(sp.b2);
  for (const auto& chi : homs.rows) {
    std::vector<int64_t> dense = make_dense(chi, g.order() - 1);
    b.add(bockstein_row(g, dense, e));
  }
  return b.finish();
}

bool vanishes_on_subgroup(const FiniteGroup& g, const Subgroup& n, const Cocycle& a) {
  (void)g;
  for (Elt x : n.members)
    for (Elt y : n.members)
      if (a.at(x, y)) return false;
  return true;
}

bool conjugation_compatible(const FiniteGroup& g, const Subgroup& n, const Cocycle& a) {
  for (Elt x : n.members)
    for (Elt y = 0; y < g.order(); ++y)
      if (mod_reduce(a.at(x, Elt(y)) - a.at(Elt(y), g.conj(x, Elt(y))), a.mod)) return false;
  return true;
}

bool conjugation_power_check(const FiniteGroup& g, const Cocycle& a) {
  for (Elt x = 1; x < g.order(); ++x) {
    int64_t o = g.elt_order(x);
    for (Elt y = 1; y < g.order(); ++y)
      if (mod_reduce(o * (a.at(x, y) - a.at(y, g.conj(x, y))), a.mod)) return false;
  }
  return true;
}

std::optional<std::vector<int64_t>> solve_linear(int eqs, int64_t mod,
                                                 const std::vector<SparseRow>& columns,
                                                 const SparseRow& b) {
  // howell span of {(col_j, e_j)}: every member (v, u) satisfies v = A u,
  // so reducing (b, 0) to (0, w) exhibits x = -w with A x = b
  int u = int(columns.size());
  std::vector<SparseRow> rows;
  rows.reserve(u);
  for (int j = 0; j < u; ++j) {
    SparseRow r = columns[j];
    r.push_back({int32_t(eqs + j), 1});
    rows.push_back(std::move(r));
  }
  Lattice l = howell(eqs + u, mod, std::move(rows));
  SparseRow res = l.reduce(b);
  std::vector<int64_t> x(u, 0);
  for (auto [c, v] : res) {
    if (c < eqs) return std::nullopt;
    x[c - eqs] = mod_reduce(-v, mod);
  }
  return x;
}

InflationSplit inflation_split(const FiniteGroup& g, const Subgroup& n, const Cocycle& a) {
  InflationSplit out;
  if (!vanishes_on_subgroup(g, n, a) || !conjugation_compatible(g, n, a)) return out;
  out.hypotheses_ok = true;
  QuotientGroup q = quotient(g, n);
  int gn = g.order(), qn = q.group.order();
  int64_t e = g.exponent();
  for (int64_t m = a.mod; m <= a.mod * e * e; m *= e) {
    Cocycle av = a;
    if (m != a.mod) av = embed_cocycle(a, m);
    int eqs = (gn - 1) * (gn - 1);
    std::vector<SparseRow> cols;
    // gamma unknowns over nonidentity pairs of the quotient
    for (Elt q1 = 1; q1 < qn; ++q1)
      for (Elt q2 = 1; q2 < qn; ++q2) {
        std::vector<std::pair<int32_t, int64_t>> t;
        for (Elt x = 1; x < gn; ++x) {
          if (q.proj[x] != q1) continue;
          for (Elt y = 1; y < gn; ++y)
            if (q.proj[y] == q2) t.push_back({pair_index(gn, x, y), 1});
        }
        cols.push_back(merge_terms(std::move(t), m));
      }
    for (Elt t = 1; t < gn; ++t) cols.push_back(coboundary_indicator_row(g, t, m));
    auto x = solve_linear(eqs, m, cols, av.sparse());
    if (!x) continue;
    out.decomposed = true;
    out.witness_mod = m;
    out.gamma = Cocycle(qn, m);
    size_t idx = 0;
    for (Elt q1 = 1; q1 < qn; ++q1)
      for (Elt q2 = 1; q2 < qn; ++q2) out.gamma.set(q1, q2, (*x)[idx++]);
    out.zeta.assign(gn, 0);
    for (Elt t = 1; t < gn; ++t) out.zeta[t] = (*x)[idx++];
    // exact verification of the decomposition
    Cocycle check = add_cocycles(inflation(g, q, out.gamma), coboundary(g, out.zeta, m), 1);
    if (!(check == av)) throw std::logic_error("inflation split verification failed");
    break;
  }
  return out;
}

}  // namespace unicov
