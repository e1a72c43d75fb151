#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "unicover/group.hpp"

namespace unicov {

struct CorpusEntry {
  FiniteGroup group;
  std::string family;
  bool fixture = false;  // kept past the order cap
  // internal split G = N x| H recorded at construction time, as member lists
  std::vector<Elt> n_members, h_members;

  CorpusEntry() = default;
  CorpusEntry(FiniteGroup g, std::string fam, bool fix = false)
      : group(std::move(g)), family(std::move(fam)), fixture(fix) {}

  bool has_split() const { return !n_members.empty(); }
};

// Deterministic corpus: abelian groups by invariant-factor chain, dihedral,
// Q8, extraspecial, cyclic-by-cyclic p-group semidirect products, plus fixed
// example groups that ignore max_order. Families enumerate in lexicographic
// parameter order; an empty filter selects everything.
std::vector<CorpusEntry> generate_corpus(int max_order,
                                         const std::vector<std::string>& families = {});

struct GroupFacts {
  long order = 0;
  long exp_g = 0;
  std::vector<int64_t> multiplier;  // invariant factors, ascending
  int64_t multiplier_order = 1;
  int64_t exp_zu = 0;
  int64_t cover_exp = 0;  // lcm(exp Zu, exp G)
  std::string zu_count;   // |Zu| in decimal, usually past 64 bits
  int derived_length = 0;
  int nilpotency_class = -1;  // -1 when not nilpotent
  bool regular_p = false;     // p-groups only
  bool powerful_p = false;    // odd-order p-groups only

  nlohmann::ordered_json to_json() const;
  static GroupFacts from_json(const nlohmann::json& j);
};

GroupFacts compute_facts(const FiniteGroup& g);

// Single-file JSON cache keyed by the Cayley-table content hash. With
// persistence off everything stays in memory, which keeps timing honest.
class FactsCache {
 public:
  // dir empty: UNICOVER_CACHE_DIR, falling back to .unicover-cache
  explicit FactsCache(bool persistent = true, std::string dir = "");
  std::optional<GroupFacts> lookup(const FiniteGroup& g) const;
  void store(const FiniteGroup& g, const GroupFacts& f);
  void save();
  const std::string& path() const { return path_; }

 private:
  bool persistent_;
  std::string path_;
  nlohmann::json data_;
  bool dirty_ = false;
};

GroupFacts facts_for(const FiniteGroup& g, FactsCache& cache);

}  // namespace unicov
