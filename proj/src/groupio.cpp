#include "unicover/groupio.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>

namespace unicov {

namespace {

FiniteGroup cayley_from_json(const nlohmann::json& j) {
  int n = j.at("order").get<int>();
  const auto& rows = j.at("table");
  if (int(rows.size()) != n) throw std::invalid_argument("table row count mismatch");
  std::vector<Elt> t;
  t.reserve(size_t(n) * n);
  for (const auto& row : rows) {
    if (int(row.size()) != n) throw std::invalid_argument("table row length mismatch");
    for (const auto& v : row) {
      long x = v.get<long>();
      if (x < 0 || x >= n) throw std::invalid_argument("table entry out of range");
      t.push_back(Elt(x));
    }
  }
  return FiniteGroup(std::move(t), n, j.value("name", "G"));
}

FiniteGroup perm_from_json(const nlohmann::json& j) {
  int d = j.at("degree").get<int>();
  std::vector<std::vector<int>> gens;
  for (const auto& row : j.at("generators")) {
    std::vector<int> p(row.begin(), row.end());
    std::vector<char> seen(d, 0);
    if (int(p.size()) != d) throw std::invalid_argument("permutation length mismatch");
    for (int x : p) {
      if (x < 0 || x >= d || seen[x]) throw std::invalid_argument("not a permutation");
      seen[x] = 1;
    }
    gens.push_back(std::move(p));
  }
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  std::vector<int> id(d);
  for (int i = 0; i < d; ++i) id[i] = i;
  elems.push_back(id);
  index[id] = 0;
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : gens) {
      std::vector<int> c(d);
      for (int i = 0; i < d; ++i) c[i] = elems[qi][g[i]];
      if (index.emplace(c, int(elems.size())).second) {
        if (elems.size() >= size_t(kMaxOrder))
          throw std::invalid_argument("permutation closure exceeds the order cap");
        elems.push_back(std::move(c));
      }
    }
  }
  int n = int(elems.size());
  std::vector<Elt> t(size_t(n) * n);
  std::vector<int> c(d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < d; ++i) c[i] = elems[a][elems[b][i]];
      t[size_t(a) * n + b] = Elt(index.at(c));
    }
  return FiniteGroup(std::move(t), n, j.value("name", "G"));
}

}  // namespace

FiniteGroup group_from_json(const nlohmann::json& j) {
  std::string kind = j.value("kind", std::string("cayley"));
  if (kind == "cayley") return cayley_from_json(j);
  if (kind == "perm") return perm_from_json(j);
  if (kind == "abelian") {
    std::vector<long> inv(j.at("invariants").begin(), j.at("invariants").end());
    FiniteGroup g = abelian(inv);
    if (j.contains("name")) g.set_name(j.at("name").get<std::string>());
    return g;
  }
  if (kind == "semidirect") {
    FiniteGroup n = group_from_json(j.at("kernel"));
    FiniteGroup h = group_from_json(j.at("complement"));
    std::vector<std::vector<Elt>> action;
    for (const auto& row : j.at("action")) {
      std::vector<Elt> p;
      for (const auto& v : row) p.push_back(Elt(v.get<int>()));
      action.push_back(std::move(p));
    }
    return semidirect_full(n, h, action, j.value("name", ""));
  }
  if (kind == "named") {
    FiniteGroup g = parse_group_spec(j.at("spec").get<std::string>());
    if (j.contains("name")) g.set_name(j.at("name").get<std::string>());
    return g;
  }
  throw std::invalid_argument("unknown group kind: " + kind);
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  nlohmann::json j;
  in >> j;
  return group_from_json(j);
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["order"] = g.order();
  auto rows = nlohmann::ordered_json::array();
  for (int a = 0; a < g.order(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(int(g.mul(Elt(a), Elt(b))));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

namespace {

long parse_long(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("expected a number in: " + s);
  return std::stol(s.substr(start, pos - start));
}

std::vector<long> parse_arglist(const std::string& s, size_t& pos) {
  if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("expected ( in: " + s);
  ++pos;
  std::vector<long> args;
  for (;;) {
    args.push_back(parse_long(s, pos));
    if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
    break;
  }
  if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ) in: " + s);
  ++pos;
  return args;
}

FiniteGroup parse_factor(const std::string& s, size_t& pos) {
  auto starts = [&](const char* w) {
    return s.compare(pos, strlen(w), w) == 0;
  };
  if (starts("Gamma1")) { pos += 6; return example_Gamma1(parse_arglist(s, pos).at(0)); }
  if (starts("Gamma2")) { pos += 6; return example_Gamma2(parse_arglist(s, pos).at(0)); }
  if (starts("Q8")) { pos += 2; return quaternion8(); }
  if (starts("Cov")) { pos += 3; return abelian_cover(parse_arglist(s, pos)); }
  if (starts("B(2,3)")) { pos += 6; return burnside23(); }
  if (starts("G(")) {
    pos += 1;
    return example_G(parse_arglist(s, pos).at(0));
  }
  if (starts("E(")) {
    pos += 1;
    if (s[pos] != '(') throw std::invalid_argument("expected ( in: " + s);
    ++pos;
    long n = parse_long(s, pos);
    if (s.compare(pos, 1, ",") != 0) throw std::invalid_argument("expected , in: " + s);
    ++pos;
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("expected ) in: " + s);
    std::string kind = s.substr(pos, close - pos);
    pos = close + 1;
    auto f = factorize(n);
    if (f.size() != 1 || f[0].second != 3)
      throw std::invalid_argument("extraspecial order must be a prime cube");
    ExtraspecialType t;
    if (kind == "expP" || kind == "+") t = ExtraspecialType::ExponentP;
    else if (kind == "expP2" || kind == "-") t = ExtraspecialType::ExponentPSquared;
    else throw std::invalid_argument("extraspecial kind must be expP/+ or expP2/-");
    return extraspecial(f[0].first, t);
  }
  if (starts("D")) { pos += 1; return dihedral(parse_long(s, pos)); }
  if (starts("C")) { pos += 1; return cyclic(parse_long(s, pos)); }
  throw std::invalid_argument("unrecognized group spec: " + s);
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.find(".json") != std::string::npos || s.find('/') != std::string::npos)
    return load_group_file(spec);
  size_t pos = 0;
  FiniteGroup g = parse_factor(s, pos);
  while (pos < s.size() && s[pos] == 'x') {
    ++pos;
    g = direct_product(g, parse_factor(s, pos));
  }
  if (pos != s.size()) throw std::invalid_argument("trailing characters in group spec: " + spec);
  return g;
}

}  // namespace unicov
