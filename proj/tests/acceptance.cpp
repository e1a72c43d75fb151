// Acceptance gate: each numbered criterion prints one [PASS]/[FAIL] line and
// the process exits nonzero when any of them fail. The facts cache is kept
// in memory only, so every timed figure reflects a real computation.
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unicover/corpus.hpp"
#include "unicover/extension.hpp"
#include "unicover/intmatrix.hpp"
#include "unicover/multiplier.hpp"
#include "unicover/suites.hpp"

using namespace unicov;

namespace {

constexpr double kAbelianBudget = 60.0;    // criterion 1
constexpr double kOracleBudget = 600.0;    // criterion 2
constexpr double kWorkedBudget = 1800.0;   // criterion 3
constexpr double kBurnsideBudget = 600.0;  // criterion 8

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();  // drop any progress text
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

FactsCache g_cache(false);

int64_t exp_of_invariants(const std::vector<int64_t>& inv) {
  return inv.empty() ? 1 : inv.back();
}

std::string plural(int n, const char* what) {
  std::ostringstream os;
  os << n << " " << what << (n == 1 ? "" : "s");
  return os.str();
}

Outcome abelian_formula() {
  Outcome out;
  int checked = 0;
  for (const auto& e : generate_corpus(64, {"abelian"})) {
    const FiniteGroup& g = e.group;
    GroupFacts f = facts_for(g, g_cache);
    auto expect = abelian_multiplier_invariants(abelian_invariants(g));
    ++checked;
    if (f.multiplier != expect) {
      out.require(false, g.name() + ": pipeline disagrees with the closed form");
      break;
    }
  }
  if (out.pass) out.detail = plural(checked, "abelian group") + " match the closed form";
  return out;
}

Outcome homology_oracle() {
  Outcome out;
  int checked = 0;
  for (const auto& e : generate_corpus(32)) {
    const FiniteGroup& g = e.group;
    if (g.order() > 32) continue;
    GroupFacts f = facts_for(g, g_cache);
    ++checked;
    if (f.multiplier != homology_multiplier(g)) {
      out.require(false, g.name() + ": pipeline disagrees with H2(G;Z)");
      break;
    }
  }
  if (out.pass) out.detail = plural(checked, "group") + " agree with the homology oracle";
  return out;
}

Outcome worked_examples() {
  Outcome out;
  for (long p : {2L, 3L}) {
    std::string tag = "p=" + std::to_string(p) + ": ";
    FiniteGroup g = example_G(p);
    MultiplierData md = schur_multiplier(g);
    out.require(md.exponent() == p, tag + "exp M(G) != p");
    CentralExtension cover = schur_cover(g, md);
    out.require(extension_exponent(cover) == p * p * p,
                tag + "section cover exponent != p^3");
    out.require(plp_check(cover, md), tag + "section cover fails plp");
    CentralExtension g2 = wrap_extension(example_Gamma2(p), {Elt(p * p * p * p)});
    out.require(is_isomorphic(g2.base, g), tag + "Gamma2 base is not G");
    out.require(plp_check(g2, schur_multiplier(g2.base)), tag + "Gamma2 fails plp");
    int64_t ee = extension_exponent(g2);
    out.require(ee == p * p, tag + "exp Gamma2 = " + std::to_string(ee) +
                                 ", expected p^2 = " + std::to_string(p * p));
    int64_t cu = unitary_cover_exponent(md);
    out.require(p * p % cu == 0, tag + "unitary cover exponent " +
                                     std::to_string(cu) + " does not divide p^2");
  }
  if (out.pass)
    out.detail = "exp M, section cover, and Gamma2 figures reproduced at p=2 and p=3";
  return out;
}

Outcome lemma_c_equalities() {
  Outcome out;
  int odd = 0, even = 0;
  for (const auto& e : generate_corpus(81, {"abelian"})) {
    const FiniteGroup& g = e.group;
    if (g.order() % 2 == 1 && g.order() <= 81) {
      GroupFacts f = facts_for(g, g_cache);
      ++odd;
      if (f.cover_exp != f.exp_g) {
        out.require(false, g.name() + ": exp cover != exp G");
        break;
      }
    }
    if ((g.order() & (g.order() - 1)) == 0 && g.order() <= 64) {
      GroupFacts f = facts_for(g, g_cache);
      int64_t two_sigma = has_square_at_exponent(abelian_invariants(g)) ? 2 : 1;
      ++even;
      if (f.cover_exp != two_sigma * f.exp_g) {
        out.require(false, g.name() + ": exp cover != 2^sigma exp G");
        break;
      }
    }
  }
  if (out.pass)
    out.detail = plural(odd, "odd group") + " and " + plural(even, "2-group") + " exact";
  return out;
}

Outcome thm_b_divisibility() {
  Outcome out;
  SuiteReport rep = run_suite("thm-main", 32, g_cache);
  int pairs = 0;
  for (const auto& v : rep.verdicts) {
    if (v.check != "B.i" && v.check != "B.ii") continue;
    ++pairs;
    if (!v.pass) {
      out.require(false, v.group + " " + v.check + ": " + v.detail);
      break;
    }
  }
  out.require(pairs > 0, "no (G, N) pairs examined");
  if (out.pass) out.detail = plural(pairs, "divisibility verdict") + ", zero violations";
  return out;
}

Outcome thm_a_bounds() {
  Outcome out;
  SuiteReport rep = run_suite("thm-a", 64, g_cache);
  int groups = 0;
  for (const auto& v : rep.verdicts) {
    if (v.check != "A.bound") continue;
    ++groups;
    if (!v.pass) {
      out.require(false, v.group + ": " + v.detail);
      break;
    }
  }
  out.require(groups > 0, "no p-groups examined");
  BoundsReport br = bounds_report(64, g_cache);
  for (const auto& v : br.divisibility)
    if (!v.pass) {
      out.require(false, v.group + ": " + v.detail);
      break;
    }
  bool odd_d2 = false, even_d2 = false;
  for (const auto& v : br.claims) {
    if (!v.pass) {
      out.require(false, std::string(v.check) + ": " + v.detail);
      break;
    }
    bool has_instance = v.detail.find("no corpus instance") == std::string::npos;
    if (v.check == "moravec-odd-d2") odd_d2 = has_instance;
    if (v.check == "moravec-even-d2") even_d2 = has_instance;
  }
  out.require(odd_d2, "claim moravec-odd-d2 found no instances");
  out.require(even_d2, "claim moravec-even-d2 found no instances");
  if (out.pass)
    out.detail = plural(groups, "p-group") + " within the bound; all comparison claims hold";
  return out;
}

Outcome prop_e_lcm() {
  Outcome out;
  SuiteReport rep = run_suite("prop-e", 32, g_cache);
  int n = 0;
  for (const auto& v : rep.verdicts) {
    ++n;
    if (!v.pass) {
      out.require(false, v.group + ": " + v.detail);
      break;
    }
  }
  out.require(n > 0, "no groups examined");
  if (out.pass) out.detail = plural(n, "group") + ", zero violations";
  return out;
}

Outcome prop_f_k1() {
  Outcome out;
  GroupFacts f2 = facts_for(abelian({2, 2}), g_cache);
  out.require(exp_of_invariants(f2.multiplier) == 2 && f2.cover_exp == 4,
              "C2 x C2: exp cover != 2 exp M");
  GroupFacts f3 = facts_for(burnside23(), g_cache);
  int64_t em3 = exp_of_invariants(f3.multiplier);
  out.require(em3 % 3 == 0, "B(2,3): 3 does not divide exp M");
  out.require(f3.cover_exp == 3 * em3, "B(2,3): exp cover != 3 exp M");
  if (out.pass)
    out.detail = "exp cover(C2xC2)=4=2 exp M; B(2,3): exp M=" + std::to_string(em3) +
                 ", exp cover=" + std::to_string(f3.cover_exp);
  return out;
}

Outcome property_suites() {
  Outcome out;
  // random normalized functions are accepted exactly when the identity holds
  std::mt19937 rng(2026);
  for (const auto& g : {cyclic(6), dihedral(4)}) {
    CocycleSpaces sp = compute_spaces(g);
    std::uniform_int_distribution<int64_t> pick(0, sp.w - 1);
    for (int it = 0; it < 200 && out.pass; ++it) {
      Cocycle a(g.order(), sp.w);
      for (auto& x : a.val) x = pick(rng);
      out.require(is_cocycle(g, a) == sp.z2.contains(a.sparse()),
                  g.name() + ": lattice membership disagrees with the identity");
    }
    SparseRow acc;
    for (const auto& r : sp.z2.rows) acc = add_scaled(acc, r, pick(rng), sp.w);
    out.require(is_cocycle(g, Cocycle::from_sparse(g.order(), sp.w, acc)),
                g.name() + ": lattice combination violates the identity");
  }
  // power-conjugation identity on every Zu basis vector, order <= 24
  int zu_rows = 0;
  for (const auto& e : generate_corpus(24)) {
    const FiniteGroup& g = e.group;
    if (g.order() > 24) continue;
    CocycleSpaces sp = compute_spaces(g);
    for (const auto& r : sp.zu.rows) {
      ++zu_rows;
      if (!conjugation_power_check(g, Cocycle::from_sparse(g.order(), sp.w, r))) {
        out.require(false, g.name() + ": power-conjugation identity fails on a Zu row");
        break;
      }
    }
    if (!out.pass) break;
  }
  out.require(zu_rows > 0, "no Zu rows examined");
  // unitarize: class preserved, defects removed, unitary inputs fixed
  for (const auto& g : {abelian({2, 2}), dihedral(4), abelian({3, 3})}) {
    if (!out.pass) break;
    CocycleSpaces low = compute_spaces_at(g, g.order());
    CocycleSpaces sp = compute_spaces(g);
    for (const auto& r : low.z2.rows) {
      Cocycle a = Cocycle::from_sparse(g.order(), low.w, r);
      Cocycle u = unitarize(g, a, sp.w);
      out.require(is_unitary(g, u), g.name() + ": unitarize left a defect");
      Cocycle diff = add_cocycles(embed_cocycle(a, sp.w), u, -1);
      out.require(sp.b2.contains(diff.sparse()), g.name() + ": unitarize moved the class");
    }
    for (const auto& r : low.zu.rows) {
      Cocycle a = Cocycle::from_sparse(g.order(), low.w, r);
      out.require(unitarize(g, a, sp.w) == embed_cocycle(a, sp.w),
                  g.name() + ": unitarize moved a unitary cocycle");
    }
  }
  // modulus stability: class data identical after enlarging the modulus
  for (const auto& g : {abelian({2, 2}), cyclic(6), dihedral(4), abelian({3, 3})}) {
    if (!out.pass) break;
    CocycleSpaces sp = compute_spaces(g);
    CocycleSpaces sp2 = compute_spaces_at(g, 2 * sp.base_mod);
    out.require(quotient_invariants(sp2.zu, sp2.bu).invariants ==
                    quotient_invariants(sp.zu, sp.bu).invariants,
                g.name() + ": multiplier invariants changed with the modulus");
    out.require(sp2.zu.exponent() == sp.zu.exponent(),
                g.name() + ": exp Zu changed with the modulus");
  }
  if (out.pass)
    out.detail = "fuzz, power-conjugation (" + plural(zu_rows, "Zu row") +
                 "), unitarize, and modulus stability all green";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    Outcome (*run)();
    double budget;  // 0 = untimed criterion
  };
  const Entry entries[] = {
      {1, "abelian multiplier closed form, order <= 64", abelian_formula, kAbelianBudget},
      {2, "homology oracle equivalence, order <= 32", homology_oracle, kOracleBudget},
      {3, "worked examples at p=2 and p=3", worked_examples, kWorkedBudget},
      {4, "unitary cover exponent of abelian groups", lemma_c_equalities, 0},
      {5, "extension divisibility over all normal subgroups", thm_b_divisibility, 0},
      {6, "derived-length bound and comparison table", thm_a_bounds, 0},
      {7, "two-generator subgroup lcm bound", prop_e_lcm, 0},
      {8, "free-Burnside base cases", prop_f_k1, kBurnsideBudget},
      {9, "property suites", property_suites, 0},
  };
  bool all = true;
  for (const auto& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out = e.run();
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget > 0 && sec > e.budget) {
      out.pass = false;
      out.detail = "budget " + std::to_string(e.budget) + "s exceeded";
    }
    std::printf("[%s] criterion %d: %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL",
                e.number, e.title, out.detail.c_str(), sec);
    std::fflush(stdout);
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
