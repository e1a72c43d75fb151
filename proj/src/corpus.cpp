#include "unicover/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "unicover/intmatrix.hpp"
#include "unicover/multiplier.hpp"

namespace unicov {

namespace {

// ascending divisibility chains d_1 | d_2 | ... with product n
void invariant_chains(long n, long prev, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (long d = std::max(prev, 2L); d <= n; ++d) {
    if (n % d || d % prev) continue;
    cur.push_back(d);
    invariant_chains(n / d, d, cur, out);
    cur.pop_back();
  }
}

std::vector<Elt> index_range(int count) {
  std::vector<Elt> v(count);
  for (int i = 0; i < count; ++i) v[i] = Elt(i);
  return v;
}

std::vector<Elt> kernel_indices(int kernel_order, int complement_order) {
  std::vector<Elt> v(kernel_order);
  for (int i = 0; i < kernel_order; ++i) v[i] = Elt(i * complement_order);
  return v;
}

CorpusEntry split_semidirect(FiniteGroup g, std::string family, int n_order, int h_order) {
  CorpusEntry e{std::move(g), std::move(family)};
  e.n_members = kernel_indices(n_order, h_order);
  e.h_members = index_range(h_order);
  return e;
}

long pow_long(long b, int e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<long> primes_upto(long n) {
  std::vector<long> ps;
  for (long p = 2; p <= n; ++p) {
    bool ok = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) { ok = false; break; }
    if (ok) ps.push_back(p);
  }
  return ps;
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(int max_order,
                                         const std::vector<std::string>& families) {
  auto wanted = [&](const std::string& f) {
    return families.empty() || std::count(families.begin(), families.end(), f) > 0;
  };
  std::vector<CorpusEntry> out;
  std::set<uint64_t> seen;
  auto push = [&](CorpusEntry e) {
    if (!e.fixture && !seen.insert(e.group.content_hash()).second) return;
    out.push_back(std::move(e));
  };

  if (wanted("abelian")) {
    for (long n = 2; n <= max_order; ++n) {
      std::vector<std::vector<long>> chains;
      std::vector<long> cur;
      invariant_chains(n, 1, cur, chains);
      for (const auto& inv : chains) {
        CorpusEntry e{abelian(inv), "abelian"};
        if (inv.size() >= 2) {
          // direct split off the first (smallest) factor
          const FiniteGroup& g = e.group;
          long stride = inv[0];
          std::vector<Elt> gens;
          for (size_t i = 1; i < inv.size(); ++i) {
            gens.push_back(Elt(stride));
            stride *= inv[i];
          }
          e.n_members = subgroup_generated(g, gens).members;
          e.h_members = subgroup_generated(g, {Elt(1)}).members;
        }
        push(std::move(e));
      }
    }
  }

  if (wanted("dihedral")) {
    for (long n = 3; 2 * n <= max_order; ++n) {
      FiniteGroup cn = cyclic(n);
      std::vector<Elt> invmap(n);
      for (long i = 0; i < n; ++i) invmap[i] = Elt((n - i) % n);
      FiniteGroup g = semidirect(cn, cyclic(2), {{Elt(1), invmap}},
                                 "D" + std::to_string(n));
      push(split_semidirect(std::move(g), "dihedral", int(n), 2));
    }
  }

  if (wanted("quaternion") && max_order >= 8) push({quaternion8(), "quaternion"});

  if (wanted("extraspecial")) {
    for (long p : {2L, 3L, 5L, 7L}) {
      if (p * p * p > max_order) break;
      push({extraspecial(p, ExtraspecialType::ExponentP), "extraspecial"});
      push({extraspecial(p, ExtraspecialType::ExponentPSquared), "extraspecial"});
    }
  }

  if (wanted("semidirect")) {
    for (long p : primes_upto(max_order / 2)) {
      for (int a = 1; pow_long(p, a + 1) <= max_order; ++a) {
        long pa = pow_long(p, a);
        for (int b = 1; pa * pow_long(p, b) <= max_order; ++b) {
          long pb = pow_long(p, b);
          std::set<std::set<long>> action_images;
          for (long t = 2; t < pa; ++t) {
            if (std::gcd(t, pa) != 1) continue;
            // need t^(p^b) = 1 so that x -> x^t extends to the complement
            long u = 1;
            for (long i = 0; i < pb; ++i) u = (u * t) % pa;
            if (u != 1) continue;
            std::set<long> image{1};
            for (long v = t; v != 1; v = (v * t) % pa) image.insert(v);
            if (!action_images.insert(image).second) continue;
            FiniteGroup cn = cyclic(pa);
            std::vector<Elt> act(pa);
            for (long i = 0; i < pa; ++i) act[i] = Elt((i * t) % pa);
            FiniteGroup g = semidirect(cn, cyclic(pb), {{Elt(1), act}},
                                       "C" + std::to_string(pa) + ":" +
                                           std::to_string(pb) + "t" + std::to_string(t));
            push(split_semidirect(std::move(g), "semidirect", int(pa), int(pb)));
          }
        }
      }
    }
  }

  auto fixture = [&](FiniteGroup g, const std::string& family) {
    if (!wanted(family)) return;
    CorpusEntry e{std::move(g), family, true};
    out.push_back(std::move(e));
  };
  for (long p : {2L, 3L}) {
    fixture(example_G(p), "example");
    fixture(example_Gamma1(p), "example");
    fixture(example_Gamma2(p), "example");
  }
  fixture(burnside23(), "burnside");
  fixture(abelian_cover({2, 2}), "cover");
  fixture(abelian_cover({2, 4}), "cover");
  fixture(abelian_cover({3, 3}), "cover");
  return out;
}

GroupFacts compute_facts(const FiniteGroup& g) {
  GroupFacts f;
  f.order = g.order();
  f.exp_g = g.exponent();
  MultiplierData md = schur_multiplier(g);
  f.multiplier = md.invariants();
  f.multiplier_order = md.order();
  f.exp_zu = md.spaces.zu.exponent();
  f.cover_exp = unitary_cover_exponent(md);
  f.zu_count = lattice_point_count(md.spaces.zu).str();
  auto dl = derived_length(g);
  f.derived_length = dl ? *dl : -1;
  auto nc = nilpotency_class(g);
  f.nilpotency_class = nc ? *nc : -1;
  if (auto p = p_group_prime(g)) {
    f.regular_p = is_regular(g);
    f.powerful_p = *p > 2 && is_powerful(g);
  }
  return f;
}

nlohmann::ordered_json GroupFacts::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order;
  j["exp_g"] = exp_g;
  j["multiplier"] = multiplier;
  j["multiplier_order"] = multiplier_order;
  j["exp_zu"] = exp_zu;
  j["cover_exp"] = cover_exp;
  j["zu_count"] = zu_count;
  j["derived_length"] = derived_length;
  j["nilpotency_class"] = nilpotency_class;
  j["regular"] = regular_p;
  j["powerful"] = powerful_p;
  return j;
}

GroupFacts GroupFacts::from_json(const nlohmann::json& j) {
  GroupFacts f;
  f.order = j.at("order").get<long>();
  f.exp_g = j.at("exp_g").get<long>();
  f.multiplier = j.at("multiplier").get<std::vector<int64_t>>();
  f.multiplier_order = j.at("multiplier_order").get<int64_t>();
  f.exp_zu = j.at("exp_zu").get<int64_t>();
  f.cover_exp = j.at("cover_exp").get<int64_t>();
  f.zu_count = j.at("zu_count").get<std::string>();
  f.derived_length = j.at("derived_length").get<int>();
  f.nilpotency_class = j.at("nilpotency_class").get<int>();
  f.regular_p = j.at("regular").get<bool>();
  f.powerful_p = j.at("powerful").get<bool>();
  return f;
}

namespace {

std::string hash_key(const FiniteGroup& g) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(g.content_hash()));
  return buf;
}

}  // namespace

FactsCache::FactsCache(bool persistent, std::string dir) : persistent_(persistent) {
  data_ = nlohmann::json::object();
  if (!persistent_) return;
  if (dir.empty()) {
    const char* env = std::getenv("UNICOVER_CACHE_DIR");
    dir = env ? env : ".unicover-cache";
  }
  path_ = dir + "/facts.json";
  std::ifstream in(path_);
  if (in) {
    try {
      in >> data_;
    } catch (...) {
      data_ = nlohmann::json::object();
    }
    if (!data_.is_object()) data_ = nlohmann::json::object();
  }
}

std::optional<GroupFacts> FactsCache::lookup(const FiniteGroup& g) const {
  auto it = data_.find(hash_key(g));
  if (it == data_.end()) return std::nullopt;
  GroupFacts f = GroupFacts::from_json(*it);
  if (f.order != g.order()) return std::nullopt;  // hash collision, recompute
  return f;
}

void FactsCache::store(const FiniteGroup& g, const GroupFacts& f) {
  data_[hash_key(g)] = f.to_json();
  dirty_ = true;
}

void FactsCache::save() {
  if (!persistent_ || !dirty_) return;
  std::filesystem::create_directories(std::filesystem::path(path_).parent_path());
  std::ofstream outf(path_);
  outf << data_.dump(1) << "\n";
  dirty_ = false;
}

GroupFacts facts_for(const FiniteGroup& g, FactsCache& cache) {
  if (auto hit = cache.lookup(g)) return *hit;
  GroupFacts f = compute_facts(g);
  cache.store(g, f);
  return f;
}

}  // namespace unicov
