#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "unicover/corpus.hpp"
#include "unicover/groupio.hpp"
#include "unicover/intmatrix.hpp"
#include "unicover/multiplier.hpp"
#include "unicover/suites.hpp"

using namespace unicov;

namespace {
// 54 abelian + 14 dihedral + 1 quaternion + 3 extraspecial + 9 semidirect
// + 10 fixtures; two candidates collide with earlier tables and dedupe
constexpr size_t kCorpusSize32 = 91;
}  // namespace

TEST_CASE("corpus is deterministic") {
  auto a = generate_corpus(32);
  auto b = generate_corpus(32);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].group.name() == b[i].group.name());
    CHECK(a[i].group.order() == b[i].group.order());
    CHECK(a[i].group.content_hash() == b[i].group.content_hash());
    CHECK(a[i].family == b[i].family);
  }
  CHECK(a.size() == kCorpusSize32);
}

TEST_CASE("corpus families and fixtures") {
  auto ab = generate_corpus(8, {"abelian"});
  CHECK(ab.size() == 10);  // 1+1+2+1+1+1+3 groups of order 2..8
  for (const auto& e : ab) CHECK(e.family == "abelian");

  auto all = generate_corpus(2);
  std::vector<std::string> wanted = {"G(2)",     "Gamma1(2)", "Gamma2(2)", "G(3)",
                                     "Gamma1(3)", "Gamma2(3)", "B(2,3)",    "Cov(2,2)",
                                     "Cov(2,4)",  "Cov(3,3)"};
  for (const auto& name : wanted) {
    bool found = false;
    for (const auto& e : all)
      if (e.group.name() == name) {
        found = true;
        CHECK(e.fixture);
      }
    CAPTURE(name);
    CHECK(found);
  }

  // no duplicate multiplication tables outside the fixtures
  std::set<uint64_t> seen;
  for (const auto& e : generate_corpus(32))
    if (!e.fixture) CHECK(seen.insert(e.group.content_hash()).second);
}

TEST_CASE("recorded splits are complementary subgroups") {
  for (const auto& e : generate_corpus(16)) {
    if (!e.has_split() || e.group.order() > 16) continue;
    CAPTURE(e.group.name());
    const FiniteGroup& g = e.group;
    Subgroup sn = subgroup_generated(g, e.n_members);
    Subgroup sh = subgroup_generated(g, e.h_members);
    CHECK(sn.members == e.n_members);
    CHECK(sh.members == e.h_members);
    CHECK(sn.members.size() * sh.members.size() == size_t(g.order()));
    for (Elt m : sn.members)
      for (Elt y = 0; y < g.order(); ++y) CHECK(sn.contains(g.conj(m, y)));
    int common = 0;
    for (Elt m : sn.members)
      if (sh.contains(m)) ++common;
    CHECK(common == 1);
  }
}

TEST_CASE("facts cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "unicover-test-cache";
  fs::remove_all(dir);
  FiniteGroup g = abelian({2, 2});
  {
    FactsCache cache(true, dir.string());
    GroupFacts f = facts_for(g, cache);
    CHECK(f.order == 4);
    CHECK(f.exp_g == 2);
    CHECK(f.multiplier == std::vector<int64_t>{2});
    CHECK(f.multiplier_order == 2);
    CHECK(f.cover_exp == 4);
    CHECK(f.zu_count == lattice_point_count(schur_multiplier(g).spaces.zu).str());
    GroupFacts again = facts_for(g, cache);
    CHECK(again.to_json().dump() == f.to_json().dump());
    cache.save();
    CHECK(fs::exists(cache.path()));
  }
  {
    FactsCache cache(true, dir.string());
    auto hit = cache.lookup(g);
    REQUIRE(hit.has_value());
    CHECK(hit->to_json().dump() == compute_facts(g).to_json().dump());
    CHECK(!cache.lookup(cyclic(5)).has_value());
  }
  fs::remove_all(dir);
}

TEST_CASE("facts json round trip") {
  GroupFacts f = compute_facts(dihedral(4));
  GroupFacts g = GroupFacts::from_json(nlohmann::json::parse(f.to_json().dump()));
  CHECK(g.to_json().dump() == f.to_json().dump());
  CHECK(g.multiplier == f.multiplier);
  CHECK(g.nilpotency_class == 2);
  CHECK(g.regular_p == false);
}

TEST_CASE("group files and specs") {
  FiniteGroup klein = load_group_file(std::string(TEST_DATA_DIR) + "/c2c2.json");
  CHECK(klein.order() == 4);
  CHECK(klein.exponent() == 2);
  CHECK(klein.is_abelian());
  CHECK(klein.name() == "C2xC2");

  nlohmann::json perm = {{"kind", "perm"},
                         {"degree", 3},
                         {"generators", {{1, 0, 2}, {1, 2, 0}}},
                         {"name", "S3"}};
  FiniteGroup s3 = group_from_json(perm);
  CHECK(s3.order() == 6);
  CHECK(!s3.is_abelian());
  CHECK(is_isomorphic(s3, dihedral(3)));

  nlohmann::json ab = {{"kind", "abelian"}, {"invariants", {2, 4}}};
  CHECK(group_from_json(ab).order() == 8);

  nlohmann::json named = {{"kind", "named"}, {"spec", "Q8"}};
  CHECK(is_isomorphic(group_from_json(named), quaternion8()));

  CHECK(parse_group_spec("C4 x C2").order() == 8);
  CHECK(parse_group_spec("D4").order() == 8);
  CHECK(parse_group_spec("G(2)").order() == 16);
  CHECK(is_isomorphic(parse_group_spec("E(27,+)"), extraspecial(3, ExtraspecialType::ExponentP)));
  CHECK(parse_group_spec("B(2,3)").exponent() == 3);
  CHECK_THROWS(parse_group_spec("X9"));

  // cayley export round-trips through the loader
  FiniteGroup d4 = dihedral(4);
  FiniteGroup back = group_from_json(group_to_json(d4));
  CHECK(back.order() == 8);
  CHECK(back.content_hash() == d4.content_hash());
}

TEST_CASE("suite runner basics") {
  FactsCache cache(false);
  SuiteReport r = run_suite("lemma-c", 16, cache);
  CHECK(r.suite == "lemma-c");
  CHECK(r.max_order == 16);
  CHECK(r.corpus_size > 0);
  CHECK(!r.verdicts.empty());
  CHECK(r.all_pass());
  CHECK(r.failures() == 0);

  // serialized report carries no timing and is reproducible
  FactsCache c2(false);
  SuiteReport r2 = run_suite("lemma-c", 16, c2);
  CHECK(r.to_json().dump() == r2.to_json().dump());
  CHECK(r.to_json().dump().find("seconds") == std::string::npos);

  CHECK_THROWS(run_suite("no-such-suite", 16, cache));
  auto names = suite_names();
  CHECK(std::count(names.begin(), names.end(), "thm-main") == 1);
}

TEST_CASE("bounds report at small order") {
  FactsCache cache(false);
  BoundsReport br = bounds_report(16, cache);
  CHECK(br.all_pass());
  CHECK(!br.rows.empty());
  for (const auto& v : br.divisibility) CHECK(v.pass);
  bool saw_d2_even = false;
  for (const auto& row : br.rows) {
    CHECK(row.order <= 16);
    if (row.p == 2 && row.d == 2) saw_d2_even = true;
  }
  CHECK(saw_d2_even);
  CHECK(br.to_json().dump().find("seconds") == std::string::npos);
}
