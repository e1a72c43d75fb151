#include "unicover/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace unicov {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

FiniteGroup::FiniteGroup(std::vector<Elt> table, int n, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("group order out of range");
  if (table_.size() != size_t(n) * n) throw std::invalid_argument("table size mismatch");
  for (Elt x : table_)
    if (x >= n) throw std::invalid_argument("table entry out of range");
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("index 0 is not an identity");
  // Latin square: every row and column is a permutation
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      Elt v = mul(a, b);
      if (seen[v]) throw std::invalid_argument("row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      Elt v = mul(b, a);
      if (seen[v]) throw std::invalid_argument("column is not a permutation");
      seen[v] = 1;
    }
  }
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("multiplication is not associative");
  } else {
    uint64_t s = 0x9e3779b97f4a7c15ull ^ (uint64_t(n) << 32);
    auto next = [&s] { s = s * 6364136223846793005ull + 1442695040888963407ull; return s >> 17; };
    for (int k = 0; k < 4'000'000; ++k) {
      Elt a = Elt(next() % n), b = Elt(next() % n), c = Elt(next() % n);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw std::invalid_argument("multiplication is not associative");
    }
  }
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) { inv_[a] = Elt(b); break; }
}

Elt FiniteGroup::pow(Elt a, long k) const {
  int o = elt_order(a);
  k %= o;
  if (k < 0) k += o;
  Elt r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::elt_order(Elt a) const {
  int o = 1;
  Elt x = a;
  while (x != 0) { x = mul(x, a); ++o; }
  return o;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < n_; ++a) e = lcm_long(e, elt_order(Elt(a)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(Elt(a), Elt(b)) != mul(Elt(b), Elt(a))) return false;
  return true;
}

uint64_t FiniteGroup::content_hash() const {
  uint64_t h = 1469598103934665603ull ^ uint64_t(n_);
  for (Elt x : table_) { h ^= x; h *= 1099511628211ull; }
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.g = &g;
  s.members = {0};
  s.mask.set(0);
  return s;
}

Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.g = &g;
  s.members.resize(g.order());
  for (int i = 0; i < g.order(); ++i) { s.members[i] = Elt(i); s.mask.set(i); }
  return s;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Elt>& gens) {
  EltSet mask;
  std::vector<Elt> work = {0};
  mask.set(0);
  for (Elt x : gens)
    if (!mask.test(x)) { mask.set(x); work.push_back(x); }
  // BFS closure under products with the generators (right multiplication
  // suffices: the closure is finite, so it is inverse-closed automatically)
  for (size_t i = 0; i < work.size(); ++i)
    for (Elt s : gens) {
      Elt y = g.mul(work[i], s);
      if (!mask.test(y)) { mask.set(y); work.push_back(y); }
    }
  std::sort(work.begin(), work.end());
  Subgroup out;
  out.g = &g;
  out.members = std::move(work);
  out.mask = mask;
  return out;
}

Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<Elt> members) {
  if (!is_subgroup(g, members)) throw std::invalid_argument("not closed under multiplication");
  std::sort(members.begin(), members.end());
  Subgroup s;
  s.g = &g;
  for (Elt x : members) s.mask.set(x);
  s.members = std::move(members);
  return s;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Elt>& members) {
  EltSet mask;
  for (Elt x : members) mask.set(x);
  if (!mask.test(0)) return false;
  for (Elt a : members)
    for (Elt b : members)
      if (!mask.test(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (Elt a : s.members)
    for (int x = 0; x < g.order(); ++x)
      if (!s.mask.test(g.conj(a, Elt(x)))) return false;
  return true;
}

bool is_central(const FiniteGroup& g, const Subgroup& s) {
  for (Elt a : s.members)
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(a, Elt(x)) != g.mul(Elt(x), a)) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elt>& seeds) {
  std::vector<Elt> gens;
  for (Elt a : seeds)
    for (int x = 0; x < g.order(); ++x) gens.push_back(g.conj(a, Elt(x)));
  return subgroup_generated(g, gens);
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  return derived_subgroup_of(g, full_subgroup(g));
}

Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elt> gens;
  EltSet seen;
  for (Elt a : s.members)
    for (Elt b : s.members) {
      Elt c = g.comm(a, b);
      if (!seen.test(c)) { seen.set(c); gens.push_back(c); }
    }
  return subgroup_generated(g, gens);
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elt> members;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      if (g.mul(Elt(a), Elt(b)) != g.mul(Elt(b), Elt(a))) central = false;
    if (central) members.push_back(Elt(a));
  }
  return subgroup_from_members(g, std::move(members));
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series = {full_subgroup(g)};
  for (;;) {
    Subgroup next = derived_subgroup_of(g, series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

std::optional<int> derived_length(const FiniteGroup& g) {
  auto series = derived_series(g);
  if (series.back().order() != 1) return std::nullopt;
  return int(series.size()) - 1;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series = {full_subgroup(g)};
  for (;;) {
    const Subgroup& prev = series.back();
    std::vector<Elt> gens;
    EltSet seen;
    for (Elt a : prev.members)
      for (int x = 0; x < g.order(); ++x) {
        Elt c = g.comm(a, Elt(x));
        if (!seen.test(c)) { seen.set(c); gens.push_back(c); }
      }
    Subgroup next = subgroup_generated(g, gens);
    if (next.order() == prev.order()) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  auto series = lower_central_series(g);
  if (series.back().order() != 1) return std::nullopt;
  return int(series.size()) - 1;
}

std::optional<long> p_group_prime(const FiniteGroup& g) {
  auto f = factorize(g.order());
  if (f.size() != 1) return std::nullopt;
  return f[0].first;
}

Subgroup agemo(const FiniteGroup& g, int i) {
  auto p = p_group_prime(g);
  if (!p) throw std::invalid_argument("agemo requires a p-group");
  long q = 1;
  for (int k = 0; k < i; ++k) q *= *p;
  std::vector<Elt> gens;
  for (int a = 0; a < g.order(); ++a) gens.push_back(g.pow(Elt(a), q));
  return subgroup_generated(g, gens);
}

bool is_powerful(const FiniteGroup& g) {
  auto p = p_group_prime(g);
  if (!p) throw std::invalid_argument("is_powerful requires a p-group");
  if (*p == 2)
    throw std::invalid_argument("is_powerful is only supported for odd primes");
  Subgroup d = derived_subgroup(g);
  Subgroup gp = agemo(g, 1);
  return gp.mask.contains(d.mask);
}

bool is_regular(const FiniteGroup& g) {
  auto pp = p_group_prime(g);
  if (!pp) throw std::invalid_argument("is_regular requires a p-group");
  long p = *pp;
  auto cls = nilpotency_class(g);
  if (cls && *cls < p) return true;  // groups of class < p are regular
  // (xy)^p must equal x^p y^p times a product of p-th powers from <x,y>'
  std::map<uint64_t, EltSet> memo;  // <x,y> mask hash -> mask of <c^p : c in <x,y>'>
  for (int x = 0; x < g.order(); ++x)
    for (int y = x; y < g.order(); ++y) {
      Elt a = Elt(x), b = Elt(y);
      if (g.mul(a, b) == g.mul(b, a)) continue;
      Elt w = g.mul(g.inv(g.mul(g.pow(a, p), g.pow(b, p))), g.pow(g.mul(a, b), p));
      if (w == 0) continue;
      Subgroup s = subgroup_generated(g, {a, b});
      uint64_t key = s.mask.hash();
      auto it = memo.find(key);
      if (it == memo.end()) {
        Subgroup d = derived_subgroup_of(g, s);
        std::vector<Elt> gens;
        for (Elt c : d.members) gens.push_back(g.pow(c, p));
        it = memo.emplace(key, subgroup_generated(g, gens).mask).first;
      }
      if (!it->second.test(w)) return false;
    }
  return true;
}

std::vector<long> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw std::invalid_argument("abelian_invariants requires an abelian group");
  // peel off maximal-order cyclic direct summands
  std::vector<long> inv;
  FiniteGroup h = g;
  while (h.order() > 1) {
    int best = 1, bestord = 1;
    for (int a = 1; a < h.order(); ++a) {
      int o = h.elt_order(Elt(a));
      if (o > bestord) { bestord = o; best = a; }
    }
    inv.push_back(bestord);
    Subgroup c = subgroup_generated(h, {Elt(best)});
    h = quotient(h, c).group;
  }
  std::reverse(inv.begin(), inv.end());  // ascending divisibility order
  return inv;
}

bool has_square_at_exponent(const std::vector<long>& invariants) {
  size_t m = invariants.size();
  return m >= 2 && invariants[m - 1] == invariants[m - 2];
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient requires a normal subgroup");
  int go = g.order();
  std::vector<Elt> rep(go);  // min element of each coset
  for (int x = 0; x < go; ++x) {
    Elt r = Elt(x);
    for (Elt a : n.members) r = std::min(r, g.mul(Elt(x), a));
    rep[x] = r;
  }
  std::vector<Elt> section;
  std::vector<int> index(go, -1);
  for (int x = 0; x < go; ++x)
    if (rep[x] == x) { index[x] = int(section.size()); section.push_back(Elt(x)); }
  int qn = int(section.size());
  std::vector<Elt> table(size_t(qn) * qn);
  for (int i = 0; i < qn; ++i)
    for (int j = 0; j < qn; ++j)
      table[size_t(i) * qn + j] = Elt(index[rep[g.mul(section[i], section[j])]]);
  std::vector<Elt> proj(go);
  for (int x = 0; x < go; ++x) proj[x] = Elt(index[rep[x]]);
  QuotientGroup out{FiniteGroup(std::move(table), qn, g.name() + "/N"), std::move(proj),
                    std::move(section)};
  for (int x = 0; x < go; ++x)
    for (int y = 0; y < go; ++y)
      if (out.proj[g.mul(Elt(x), Elt(y))] !=
          out.group.mul(out.proj[x], out.proj[y]))
        throw std::logic_error("quotient projection is not a homomorphism");
  return out;
}

SubgroupGroup subgroup_as_group(const Subgroup& s) {
  const FiniteGroup& g = *s.g;
  int m = s.order();
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < m; ++i) local[s.members[i]] = i;
  std::vector<Elt> table(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[size_t(i) * m + j] = Elt(local[g.mul(s.members[i], s.members[j])]);
  return {FiniteGroup(std::move(table), m, g.name() + ".sub"), s.members};
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  // atoms: normal closures of single elements; every normal subgroup is a
  // join of the atoms it contains, so join-closure from atoms is complete
  std::vector<Subgroup> atoms;
  std::unordered_set<uint64_t> seen;
  for (int a = 1; a < g.order(); ++a) {
    Subgroup c = normal_closure(g, {Elt(a)});
    if (seen.insert(c.mask.hash()).second) atoms.push_back(std::move(c));
  }
  std::vector<Subgroup> out = {trivial_subgroup(g)};
  seen.clear();
  seen.insert(out[0].mask.hash());
  for (auto& a : atoms)
    if (seen.insert(a.mask.hash()).second) out.push_back(a);
  for (size_t i = 0; i < out.size(); ++i)
    for (const Subgroup& a : atoms) {
      if (out[i].mask.contains(a.mask)) continue;
      std::vector<Elt> gens = out[i].members;
      gens.insert(gens.end(), a.members.begin(), a.members.end());
      Subgroup j = subgroup_generated(g, gens);
      if (seen.insert(j.mask.hash()).second) out.push_back(std::move(j));
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.members < y.members;
  });
  return out;
}

static Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elt> members;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elt a : s.members)
      if (!s.mask.test(g.conj(a, Elt(x)))) { ok = false; break; }
    if (ok) members.push_back(Elt(x));
  }
  return subgroup_from_members(g, std::move(members));
}

Subgroup sylow(const FiniteGroup& g, long p) {
  long pk = 1, n = g.order();
  while (n % p == 0) { n /= p; pk *= p; }
  if (pk == 1) return trivial_subgroup(g);
  // start from any element of order p, grow within normalizers
  Subgroup s = trivial_subgroup(g);
  for (int a = 1; a < g.order(); ++a)
    if (g.elt_order(Elt(a)) == int(p)) { s = subgroup_generated(g, {Elt(a)}); break; }
  while (s.order() < pk) {
    Subgroup nz = normalizer(g, s);
    // pick a p-element of the normalizer outside s; one exists because
    // s is a proper p-subgroup, so its normalizer quotient has order
    // divisible by p
    bool grew = false;
    for (Elt x : nz.members) {
      if (s.mask.test(x)) continue;
      auto f = factorize(g.elt_order(x));
      if (f.size() == 1 && f[0].first == p) {
        std::vector<Elt> gens = s.members;
        gens.push_back(x);
        Subgroup t = subgroup_generated(g, gens);
        if (factorize(t.order()).size() == 1) { s = std::move(t); grew = true; break; }
      }
    }
    if (!grew) {
      // fall back: adjoin the p-part of any normalizer element outside s
      for (Elt x : nz.members) {
        if (s.mask.test(x)) continue;
        int o = g.elt_order(x);
        long m = o;
        while (m % p == 0) m /= p;
        Elt y = g.pow(x, m);  // p-element
        if (y == 0 || s.mask.test(y)) continue;
        std::vector<Elt> gens = s.members;
        gens.push_back(y);
        Subgroup t = subgroup_generated(g, gens);
        if (factorize(t.order()).size() == 1) { s = std::move(t); grew = true; break; }
      }
    }
    if (!grew) throw std::logic_error("sylow growth stalled");
  }
  return s;
}

std::vector<Subgroup> two_generator_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  std::unordered_set<uint64_t> seen;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a; b < g.order(); ++b) {
      Subgroup s = subgroup_generated(g, {Elt(a), Elt(b)});
      if (seen.insert(s.mask.hash()).second) out.push_back(std::move(s));
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.members < y.members;
  });
  return out;
}

std::vector<Elt> generating_set(const FiniteGroup& g) {
  std::vector<Elt> gens;
  Subgroup s = trivial_subgroup(g);
  while (s.order() < g.order()) {
    for (int a = 1; a < g.order(); ++a)
      if (!s.mask.test(a)) {
        gens.push_back(Elt(a));
        s = subgroup_generated(g, gens);
        break;
      }
  }
  return gens;
}

namespace {

struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  std::vector<Elt> gens;                  // generators of a
  std::vector<std::vector<Elt>> cand;     // candidate images per generator
  std::vector<int> img;                   // partial map a -> b, -1 unknown

  bool extend(size_t k) {
    if (k == gens.size()) return true;
    for (Elt c : cand[k]) {
      std::vector<int> saved = img;
      if (assign(gens[k], c) && extend(k + 1)) return true;
      img = std::move(saved);
    }
    return false;
  }

  // set img[x]=y and close under multiplication with all known pairs
  bool assign(Elt x, Elt y) {
    std::vector<std::pair<Elt, Elt>> queue = {{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (img[u] >= 0) {
        if (img[u] != v) return false;
        continue;
      }
      if (a.elt_order(u) != b.elt_order(v)) return false;
      img[u] = v;
      for (int w = 0; w < a.order(); ++w) {
        if (img[w] < 0) continue;
        queue.push_back({a.mul(u, Elt(w)), b.mul(v, Elt(img[w]))});
        queue.push_back({a.mul(Elt(w), u), b.mul(Elt(img[w]), v)});
      }
    }
    return true;
  }
};

}  // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > 128) throw std::invalid_argument("isomorphism test capped at order 128");
  // order census must match
  std::map<int, int> ca, cb;
  for (int x = 0; x < a.order(); ++x) ++ca[a.elt_order(Elt(x))];
  for (int x = 0; x < b.order(); ++x) ++cb[b.elt_order(Elt(x))];
  if (ca != cb) return false;
  IsoSearch search{a, b, generating_set(a), {}, {}};
  for (Elt gen : search.gens) {
    std::vector<Elt> c;
    int o = a.elt_order(gen);
    for (int y = 0; y < b.order(); ++y)
      if (b.elt_order(Elt(y)) == o) c.push_back(Elt(y));
    search.cand.push_back(std::move(c));
  }
  search.img.assign(a.order(), -1);
  search.img[0] = 0;
  if (!search.extend(0)) return false;
  // closure fills the whole map once the generators are assigned; check
  // bijectivity for safety
  std::vector<char> hit(b.order(), 0);
  for (int x = 0; x < a.order(); ++x) {
    if (search.img[x] < 0) return false;
    if (hit[search.img[x]]) return false;
    hit[search.img[x]] = 1;
  }
  return true;
}

bool surjective_hom_exists(const FiniteGroup& from, const FiniteGroup& onto) {
  int fn = from.order(), on = onto.order();
  if (on == 1) return true;
  if (fn % on) return false;
  std::vector<Elt> gens = generating_set(from);
  int k = int(gens.size());
  double work = 1;
  for (int i = 0; i < k; ++i) work *= on;
  if (work > double(1 << 20)) throw std::invalid_argument("surjection search too large");

  std::vector<int> tup(k, 0);
  std::vector<int> img(fn);
  while (true) {
    bool prune = false;
    for (int i = 0; i < k && !prune; ++i)
      if (from.elt_order(gens[i]) % onto.elt_order(Elt(tup[i]))) prune = true;
    if (!prune) {
      // spread along the Cayley graph; consistency on every generator edge
      // makes the assignment a homomorphism
      std::fill(img.begin(), img.end(), -1);
      img[0] = 0;
      std::vector<Elt> queue{0};
      bool ok = true;
      for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
        Elt x = queue[qi];
        for (int i = 0; i < k && ok; ++i) {
          Elt y = from.mul(x, gens[i]);
          int v = onto.mul(Elt(img[x]), Elt(tup[i]));
          if (img[y] < 0) {
            img[y] = v;
            queue.push_back(y);
          } else if (img[y] != v) {
            ok = false;
          }
        }
      }
      if (ok) {
        std::vector<char> hit(on, 0);
        int count = 0;
        for (int x = 0; x < fn; ++x)
          if (img[x] >= 0 && !hit[img[x]]) { hit[img[x]] = 1; ++count; }
        if (count == on) return true;
      }
    }
    int i = k - 1;
    while (i >= 0 && tup[i] == on - 1) tup[i--] = 0;
    if (i < 0) return false;
    ++tup[i];
  }
}

// --- constructors ---

FiniteGroup cyclic(long n) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("cyclic order out of range");
  std::vector<Elt> t(size_t(n) * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) t[size_t(a) * n + b] = Elt((a + b) % n);
  return FiniteGroup(std::move(t), int(n), "C" + std::to_string(n));
}

FiniteGroup abelian(const std::vector<long>& invariants) {
  long n = 1;
  for (long d : invariants) {
    if (d < 2) throw std::invalid_argument("invariant factors must be >= 2");
    n *= d;
  }
  if (n > kMaxOrder) throw std::invalid_argument("abelian order out of range");
  size_t m = invariants.size();
  std::vector<long> stride(m, 1);
  for (size_t i = 1; i < m; ++i) stride[i] = stride[i - 1] * invariants[i - 1];
  std::vector<Elt> t(size_t(n) * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      long s = 0;
      for (size_t i = 0; i < m; ++i) {
        long ai = (a / stride[i]) % invariants[i];
        long bi = (b / stride[i]) % invariants[i];
        s += ((ai + bi) % invariants[i]) * stride[i];
      }
      t[size_t(a) * n + b] = Elt(s);
    }
  std::string name;
  for (size_t i = 0; i < m; ++i)
    name += (i ? "x" : "") + ("C" + std::to_string(invariants[i]));
  if (name.empty()) name = "C1";
  return FiniteGroup(std::move(t), int(n), name);
}

FiniteGroup dihedral(long n) {
  if (n < 1 || 2 * n > kMaxOrder) throw std::invalid_argument("dihedral order out of range");
  long m = 2 * n;
  // index j*n+i encodes r^i s^j
  std::vector<Elt> t(size_t(m) * m);
  for (long j = 0; j < 2; ++j)
    for (long i = 0; i < n; ++i)
      for (long l = 0; l < 2; ++l)
        for (long k = 0; k < n; ++k) {
          long ri = (j == 0) ? (i + k) % n : ((i - k) % n + n) % n;
          long rj = (j + l) % 2;
          t[size_t(j * n + i) * m + (l * n + k)] = Elt(rj * n + ri);
        }
  return FiniteGroup(std::move(t), int(m), "D" + std::to_string(n));
}

FiniteGroup quaternion8() {
  // index a*2+b encodes i^a j^b with i^4=1, j^2=i^2, jij^-1=i^-1
  std::vector<Elt> t(64);
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 2; ++b)
      for (long c = 0; c < 4; ++c)
        for (long d = 0; d < 2; ++d) {
          long ra, rb;
          if (b == 0) { ra = (a + c) % 4; rb = d; }
          else if (d == 0) { ra = ((a - c) % 4 + 4) % 4; rb = 1; }
          else { ra = ((a - c + 2) % 4 + 4) % 4; rb = 0; }
          t[size_t(a * 2 + b) * 8 + (c * 2 + d)] = Elt(ra * 2 + rb);
        }
  return FiniteGroup(std::move(t), 8, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  long n = long(a.order()) * b.order();
  if (n > kMaxOrder) throw std::invalid_argument("direct product order out of range");
  std::vector<Elt> t(size_t(n) * n);
  int bo = b.order();
  for (int a1 = 0; a1 < a.order(); ++a1)
    for (int b1 = 0; b1 < bo; ++b1)
      for (int a2 = 0; a2 < a.order(); ++a2)
        for (int b2 = 0; b2 < bo; ++b2)
          t[size_t(a1 * bo + b1) * n + (a2 * bo + b2)] =
              Elt(a.mul(Elt(a1), Elt(a2)) * bo + b.mul(Elt(b1), Elt(b2)));
  return FiniteGroup(std::move(t), int(n), a.name() + "x" + b.name());
}

FiniteGroup semidirect_full(const FiniteGroup& n, const FiniteGroup& h,
                            const std::vector<std::vector<Elt>>& action,
                            std::string name) {
  int no = n.order(), ho = h.order();
  long m = long(no) * ho;
  if (m > kMaxOrder) throw std::invalid_argument("semidirect order out of range");
  if (int(action.size()) != ho) throw std::invalid_argument("action size mismatch");
  for (int j = 0; j < ho; ++j) {
    const auto& phi = action[j];
    if (int(phi.size()) != no || phi[0] != 0)
      throw std::invalid_argument("action entry is not identity-preserving");
    for (int x = 0; x < no; ++x)
      for (int y = 0; y < no; ++y)
        if (phi[n.mul(Elt(x), Elt(y))] != n.mul(phi[x], phi[y]))
          throw std::invalid_argument("action entry is not an automorphism");
  }
  for (int j = 0; j < ho; ++j)
    for (int k = 0; k < ho; ++k) {
      Elt jk = h.mul(Elt(j), Elt(k));
      for (int x = 0; x < no; ++x)
        if (action[jk][x] != action[j][action[k][x]])
          throw std::invalid_argument("action is not a homomorphism");
    }
  // index a*|H|+b encodes (n_a, h_b); (n1,h1)(n2,h2) = (n1 phi_{h1}(n2), h1 h2)
  std::vector<Elt> t(size_t(m) * m);
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < ho; ++b)
      for (int c = 0; c < no; ++c)
        for (int d = 0; d < ho; ++d)
          t[size_t(a * ho + b) * m + (c * ho + d)] =
              Elt(n.mul(Elt(a), action[b][c]) * ho + h.mul(Elt(b), Elt(d)));
  if (name.empty()) name = n.name() + ":" + h.name();
  return FiniteGroup(std::move(t), int(m), std::move(name));
}

FiniteGroup semidirect(const FiniteGroup& n, const FiniteGroup& h,
                       const std::vector<std::pair<Elt, std::vector<Elt>>>& gen_action,
                       std::string name) {
  int no = n.order(), ho = h.order();
  // close the assignment h_j -> phi_j over products; the graph must project
  // bijectively onto H or the assignment does not define a homomorphism
  std::vector<Elt> id(no);
  for (int x = 0; x < no; ++x) id[x] = Elt(x);
  std::vector<std::vector<Elt>> action(ho);
  std::vector<char> known(ho, 0);
  action[0] = id;
  known[0] = 1;
  std::vector<Elt> work = {0};
  std::vector<std::pair<Elt, std::vector<Elt>>> gens = gen_action;
  for (size_t i = 0; i < work.size(); ++i)
    for (const auto& [hg, phi] : gens) {
      Elt u = h.mul(work[i], hg);
      std::vector<Elt> comp(no);
      for (int x = 0; x < no; ++x) comp[x] = action[work[i]][phi[x]];
      if (!known[u]) {
        known[u] = 1;
        action[u] = std::move(comp);
        work.push_back(u);
      } else if (action[u] != comp) {
        throw std::invalid_argument("generator action does not extend to a homomorphism");
      }
    }
  for (int j = 0; j < ho; ++j)
    if (!known[j]) throw std::invalid_argument("generator images do not generate H");
  return semidirect_full(n, h, action, std::move(name));
}

static std::vector<Elt> power_automorphism(const FiniteGroup& n, long t) {
  std::vector<Elt> phi(n.order());
  for (int x = 0; x < n.order(); ++x) phi[x] = n.pow(Elt(x), t);
  return phi;
}

FiniteGroup example_G(long p) {
  FiniteGroup cy = cyclic(p * p);
  return semidirect(cy, cyclic(p * p), {{Elt(1), power_automorphism(cy, p + 1)}},
                    "G(" + std::to_string(p) + ")");
}

FiniteGroup example_Gamma1(long p) {
  FiniteGroup cy = cyclic(p * p * p);
  return semidirect(cy, cyclic(p * p), {{Elt(1), power_automorphism(cy, p + 1)}},
                    "Gamma1(" + std::to_string(p) + ")");
}

FiniteGroup example_Gamma2(long p) {
  long q = p * p;
  FiniteGroup nn = abelian({q, q});
  // generator x acts by y -> y^{p+1} z, z -> z; coordinates (u,v) = y^u z^v
  // with index v*q+u per the abelian() stride layout
  std::vector<Elt> phi(q * q);
  for (long u = 0; u < q; ++u)
    for (long v = 0; v < q; ++v) {
      long uu = ((p + 1) * u) % q;
      long vv = (u + v) % q;
      phi[size_t(v) * q + u] = Elt(vv * q + uu);
    }
  return semidirect(nn, cyclic(q), {{Elt(1), phi}}, "Gamma2(" + std::to_string(p) + ")");
}

FiniteGroup abelian_cover(const std::vector<long>& invariants) {
  size_t m = invariants.size();
  auto fac0 = factorize(invariants.empty() ? 2 : invariants[0]);
  long p = fac0[0].first;
  for (long d : invariants) {
    auto f = factorize(d);
    if (f.size() != 1 || f[0].first != p)
      throw std::invalid_argument("abelian_cover requires powers of one prime");
  }
  for (size_t i = 1; i < m; ++i)
    if (invariants[i] % invariants[i - 1])
      throw std::invalid_argument("invariant factors must be in divisibility order");
  // elements (a_1..a_m, b_{ij}) with i<j; b lives mod min(d_i,d_j) = d_i
  std::vector<long> bmod;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) bmod.push_back(invariants[i]);
  long n = 1;
  for (long d : invariants) n *= d;
  for (long d : bmod) n *= d;
  if (n > kMaxOrder) throw std::invalid_argument("cover order out of range");
  size_t nb = bmod.size();
  std::vector<long> stride(m + nb, 1);
  std::vector<long> mods(invariants);
  mods.insert(mods.end(), bmod.begin(), bmod.end());
  for (size_t i = 1; i < mods.size(); ++i) stride[i] = stride[i - 1] * mods[i - 1];
  auto digit = [&](long x, size_t i) { return (x / stride[i]) % mods[i]; };
  std::vector<Elt> t(size_t(n) * n);
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      long r = 0;
      for (size_t i = 0; i < m; ++i)
        r += ((digit(x, i) + digit(y, i)) % mods[i]) * stride[i];
      size_t k = m;
      for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j, ++k) {
          long v = (digit(x, k) + digit(y, k) + digit(x, j) * digit(y, i)) % mods[k];
          r += v * stride[k];
        }
      t[size_t(x) * n + y] = Elt(r);
    }
  std::string name = "Cov(";
  for (size_t i = 0; i < m; ++i) name += (i ? "," : "") + std::to_string(invariants[i]);
  name += ")";
  return FiniteGroup(std::move(t), int(n), std::move(name));
}

FiniteGroup burnside23() {
  FiniteGroup g = abelian_cover({3, 3});
  g.set_name("B(2,3)");
  return g;
}

FiniteGroup extraspecial(long p, ExtraspecialType type) {
  if (p == 2)
    return type == ExtraspecialType::ExponentP ? dihedral(4) : quaternion8();
  if (type == ExtraspecialType::ExponentP) {
    FiniteGroup g = abelian_cover({p, p});
    g.set_name("E(" + std::to_string(p * p * p) + ",expP)");
    return g;
  }
  FiniteGroup cy = cyclic(p * p);
  return semidirect(cy, cyclic(p), {{Elt(1), power_automorphism(cy, p + 1)}},
                    "E(" + std::to_string(p * p * p) + ",expP2)");
}

}  // namespace unicov
