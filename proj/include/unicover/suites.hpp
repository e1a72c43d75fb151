#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "unicover/corpus.hpp"

namespace unicov {

// one checked statement; detail carries witness numbers on failure
struct Verdict {
  std::string group;
  std::string check;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int max_order = 0;
  int corpus_size = 0;  // groups examined
  std::vector<Verdict> verdicts;
  double seconds = 0;  // shown in the table, never serialized

  bool all_pass() const;
  int failures() const;
  nlohmann::ordered_json to_json() const;
  std::string table() const;
};

// suite names: thm-main, thm-a, lemma-c, prop-d, prop-e, prop-f
const std::vector<std::string>& suite_names();
int default_max_order(const std::string& suite);
// max_order 0 picks the per-suite default
SuiteReport run_suite(const std::string& suite, int max_order, FactsCache& cache);

// exponent-bound comparison across the corpus p-groups: per-group rows plus
// the aggregated comparison claims (a claim with no instance in range is
// reported as such rather than silently passing)
struct BoundsRow {
  std::string group;
  long order = 0, p = 0;
  int64_t exp_g = 0, exp_m = 0;
  int d = 0, c = 0;
  int64_t thma = 0;
  int64_t moravec = 0;  // 0 when d < 2 (bound not applicable)
  int64_t jones = 0;    // 0 when c < 2
  int64_t ellis = 0;
};

struct BoundsReport {
  int max_order = 0;
  std::vector<BoundsRow> rows;
  std::vector<Verdict> divisibility;  // exp M | bound, per applicable bound
  std::vector<Verdict> claims;
  double seconds = 0;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  std::string table() const;
};

BoundsReport bounds_report(int max_order, FactsCache& cache);

}  // namespace unicov
