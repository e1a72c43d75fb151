#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unicover/corpus.hpp"
#include "unicover/extension.hpp"
#include "unicover/groupio.hpp"
#include "unicover/multiplier.hpp"
#include "unicover/suites.hpp"

using namespace unicov;

namespace {

void emit_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(1) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

// group file with the extension annotations; loaders that only want the
// group read the plain Cayley fields and ignore the rest
nlohmann::json extension_json(const CentralExtension& e) {
  nlohmann::json j = group_to_json(e.total);
  nlohmann::json x;
  x["base"] = e.base.name();
  x["base_order"] = e.base.order();
  x["kernel"] = e.kernel_members;
  x["kernel_invariants"] = e.kernel_invariants;
  x["projection"] = e.proj;
  x["section"] = e.section;
  j["extension"] = x;
  return j;
}

void write_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

std::string invariants_str(const std::vector<int64_t>& inv) {
  if (inv.empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < inv.size(); ++i)
    s += (i ? " x C" : "C") + std::to_string(inv[i]);
  return s;
}

int cmd_multiplier(const std::string& spec, const std::string& json_path) {
  FiniteGroup g = parse_group_spec(spec);
  MultiplierData md = schur_multiplier(g);
  int64_t zu_exp = md.spaces.zu.exponent();
  int64_t cover = unitary_cover_exponent(md);
  std::cout << "group " << g.name() << ", order " << g.order() << ", exponent "
            << g.exponent() << "\n";
  std::cout << "M(G) = " << invariants_str(md.invariants()) << " (order " << md.order()
            << ", exponent " << md.exponent() << ")\n";
  std::cout << "exp Zu = " << zu_exp << ", unitary cover exponent = " << cover << "\n";
  nlohmann::ordered_json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["multiplier"] = md.invariants();
  j["multiplier_order"] = md.order();
  j["multiplier_exponent"] = md.exponent();
  j["zu_exponent"] = zu_exp;
  j["cover_exponent"] = cover;
  emit_json(json_path, j);
  return 0;
}

int cmd_zu_exp(const std::string& spec, const std::string& json_path) {
  FiniteGroup g = parse_group_spec(spec);
  CocycleSpaces sp = compute_spaces(g);
  int64_t zu_exp = sp.zu.exponent();
  int64_t cover = std::lcm(zu_exp, g.exponent());
  std::cout << "group " << g.name() << ": exp Zu = " << zu_exp
            << ", exp G = " << g.exponent() << ", unitary cover exponent = " << cover
            << "\n";
  nlohmann::ordered_json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["zu_exponent"] = zu_exp;
  j["cover_exponent"] = cover;
  emit_json(json_path, j);
  return 0;
}

int cmd_cover(const std::string& spec, int mu, const std::string& out,
              const std::string& json_path) {
  FiniteGroup g = parse_group_spec(spec);
  MultiplierData md = schur_multiplier(g);
  if (mu < 0 || size_t(mu) >= md.invariants().size())
    throw std::invalid_argument("class index out of range: M(G) has " +
                                std::to_string(md.invariants().size()) +
                                " invariant components");
  CentralExtension e = mu_cover(g, md, size_t(mu));
  auto image = standard_map_image(e, md);
  std::cout << "mu-cover for class " << mu << " (order " << md.invariants()[mu]
            << ") of " << g.name() << "\n";
  std::cout << "total order " << e.total.order() << ", kernel "
            << invariants_str(e.kernel_invariants) << ", exponent "
            << extension_exponent(e) << "\n";
  std::cout << "standard map image = " << invariants_str(image) << "\n";
  if (!out.empty()) write_file(out, extension_json(e));
  nlohmann::ordered_json j;
  j["group"] = g.name();
  j["class_index"] = mu;
  j["class_order"] = md.invariants()[mu];
  j["total_order"] = e.total.order();
  j["kernel"] = e.kernel_invariants;
  j["exponent"] = extension_exponent(e);
  j["standard_map_image"] = image;
  emit_json(json_path, j);
  return 0;
}

int cmd_omega(const std::string& spec, const std::string& out,
              const std::string& json_path) {
  FiniteGroup g = parse_group_spec(spec);
  MultiplierData md = schur_multiplier(g);
  CentralExtension e = schur_cover(g, md);
  bool plp = plp_check(e, md);
  std::cout << "omega product over the multiplier representatives of " << g.name()
            << "\n";
  std::cout << "total order " << e.total.order() << ", kernel "
            << invariants_str(e.kernel_invariants) << ", exponent "
            << extension_exponent(e) << "\n";
  std::cout << "projective lifting property: " << (plp ? "yes" : "no") << "\n";
  if (!out.empty()) write_file(out, extension_json(e));
  nlohmann::ordered_json j;
  j["group"] = g.name();
  j["total_order"] = e.total.order();
  j["kernel"] = e.kernel_invariants;
  j["exponent"] = extension_exponent(e);
  j["plp"] = plp;
  emit_json(json_path, j);
  return plp ? 0 : 1;
}

int cmd_verify(const std::string& suite, int max_order, const std::string& json_path,
               FactsCache& cache) {
  std::vector<std::string> wanted;
  if (suite == "all") wanted = suite_names();
  else wanted.push_back(suite);
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  int failures = 0;
  for (const auto& name : wanted) {
    SuiteReport rep = run_suite(name, max_order, cache);
    std::cout << rep.table() << "\n";
    reports.push_back(rep.to_json());
    failures += rep.failures();
  }
  cache.save();
  nlohmann::ordered_json j;
  j["reports"] = reports;
  emit_json(json_path, j);
  return failures == 0 ? 0 : 1;
}

int cmd_report(int max_order, const std::string& json_path, FactsCache& cache) {
  BoundsReport rep = bounds_report(max_order, cache);
  std::cout << rep.table();
  cache.save();
  emit_json(json_path, rep.to_json());
  return rep.all_pass() ? 0 : 1;
}

std::string file_slug(const std::string& name) {
  std::string s;
  for (char c : name)
    s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return s;
}

int cmd_corpus(const std::string& dir, int max_order) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto corpus = generate_corpus(max_order);
  nlohmann::ordered_json index = nlohmann::ordered_json::array();
  for (const auto& e : corpus) {
    std::string file = e.family + "-" + file_slug(e.group.name()) + ".json";
    nlohmann::json j = group_to_json(e.group);
    j["family"] = e.family;
    write_file((fs::path(dir) / file).string(), j);
    index.push_back({{"name", e.group.name()},
                     {"family", e.family},
                     {"order", e.group.order()},
                     {"file", file}});
  }
  write_file((fs::path(dir) / "index.json").string(), index);
  std::cout << "wrote " << corpus.size() << " group files to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unitary cocycle spaces, Schur multipliers, and covers of small groups"};
  app.require_subcommand(1);
  bool no_cache = false, serial = false;
  app.add_flag("--no-cache", no_cache, "do not read or write the facts cache");
  app.add_flag("--serial", serial, "disable the parallel kernels");

  std::string m_spec, m_json;
  auto* m = app.add_subcommand("multiplier", "Schur multiplier of a group");
  m->fallthrough();
  m->add_option("group", m_spec, "group file or constructor expression")->required();
  m->add_option("--json", m_json, "JSON report path, - for stdout");

  std::string z_spec, z_json;
  auto* z = app.add_subcommand("zu-exp", "unitary cocycle group and cover exponents");
  z->fallthrough();
  z->add_option("group", z_spec, "group file or constructor expression")->required();
  z->add_option("--json", z_json, "JSON report path, - for stdout");

  std::string c_spec, c_out, c_json;
  int c_mu = 0;
  auto* c = app.add_subcommand("cover", "cyclic-kernel cover for one multiplier class");
  c->fallthrough();
  c->add_option("--mu", c_mu, "multiplier class index")->required();
  c->add_option("group", c_spec, "group file or constructor expression")->required();
  c->add_option("--out", c_out, "export the extension as a group file");
  c->add_option("--json", c_json, "JSON report path, - for stdout");

  std::string o_spec, o_out, o_json;
  auto* o = app.add_subcommand("omega-product",
                               "Schur cover as an omega product over multiplier "
                               "representatives");
  o->fallthrough();
  o->add_option("group", o_spec, "group file or constructor expression")->required();
  o->add_option("--out", o_out, "export the extension as a group file");
  o->add_option("--json", o_json, "JSON report path, - for stdout");

  std::string v_suite, v_json;
  int v_max = 0;
  auto* v = app.add_subcommand("verify", "run a theorem verification suite");
  v->fallthrough();
  v->add_option("--suite", v_suite, "thm-main, thm-a, lemma-c, prop-d, prop-e, prop-f, all")
      ->required();
  v->add_option("--max-order", v_max, "corpus order cap, 0 for the suite default");
  v->add_option("--json", v_json, "JSON report path, - for stdout");

  bool r_bounds = false;
  int r_max = 0;
  std::string r_json;
  auto* r = app.add_subcommand("report", "corpus-wide reports");
  r->fallthrough();
  r->add_flag("--bounds", r_bounds, "exponent bound comparison table");
  r->add_option("--max-order", r_max, "corpus order cap, 0 for the default");
  r->add_option("--json", r_json, "JSON report path, - for stdout");

  std::string e_dir;
  int e_max = 32;
  auto* ec = app.add_subcommand("corpus", "emit the corpus as group files");
  ec->fallthrough();
  ec->add_option("--emit", e_dir, "output directory")->required();
  ec->add_option("--max-order", e_max, "corpus order cap");

  CLI11_PARSE(app, argc, argv);

  set_parallel_kernels(!serial);
  try {
    if (v->parsed() || r->parsed()) {
      FactsCache cache(!no_cache);
      if (v->parsed()) {
        if (v_suite != "all" &&
            std::find(suite_names().begin(), suite_names().end(), v_suite) ==
                suite_names().end())
          throw std::invalid_argument("unknown suite: " + v_suite);
        return cmd_verify(v_suite, v_max, v_json, cache);
      }
      if (!r_bounds) throw std::invalid_argument("report: only --bounds is available");
      return cmd_report(r_max, r_json, cache);
    }
    if (m->parsed()) return cmd_multiplier(m_spec, m_json);
    if (z->parsed()) return cmd_zu_exp(z_spec, z_json);
    if (c->parsed()) return cmd_cover(c_spec, c_mu, c_out, c_json);
    if (o->parsed()) return cmd_omega(o_spec, o_out, o_json);
    if (ec->parsed()) return cmd_corpus(e_dir, e_max);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
