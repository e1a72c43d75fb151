#pragma once

// exhaustive reference implementations over (Z/m)^n for tiny n and m; the
// lattice engine is checked against these point sets
#include <cstdint>
#include <set>
#include <vector>

#include "unicover/modmatrix.hpp"

namespace brute {

using Pts = std::set<std::vector<int64_t>>;

inline Pts span(int n, int64_t m, const std::vector<std::vector<int64_t>>& gens) {
  Pts out;
  std::vector<int64_t> zero(n, 0);
  out.insert(zero);
  std::vector<std::vector<int64_t>> work{zero};
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      std::vector<int64_t> w(n);
      for (int i = 0; i < n; ++i) w[i] = (v[i] + g[i]) % m;
      if (out.insert(w).second) work.push_back(w);
    }
  }
  return out;
}

inline std::vector<std::vector<int64_t>> all_vectors(int n, int64_t m) {
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> v(n, 0);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && ++v[i] == m) v[i++] = 0;
    if (i == n) return out;
  }
}

inline Pts kernel(int n, int64_t m, const std::vector<std::vector<int64_t>>& rows) {
  Pts out;
  for (const auto& x : all_vectors(n, m)) {
    bool ok = true;
    for (const auto& r : rows) {
      int64_t s = 0;
      for (int i = 0; i < n; ++i) s += x[i] * r[i];
      if (s % m != 0) { ok = false; break; }
    }
    if (ok) out.insert(x);
  }
  return out;
}

inline Pts perp(int n, int64_t m, const Pts& pts) {
  Pts out;
  for (const auto& x : all_vectors(n, m)) {
    bool ok = true;
    for (const auto& p : pts) {
      int64_t s = 0;
      for (int i = 0; i < n; ++i) s += x[i] * p[i];
      if (s % m != 0) { ok = false; break; }
    }
    if (ok) out.insert(x);
  }
  return out;
}

inline Pts intersect(const Pts& a, const Pts& b) {
  Pts out;
  for (const auto& x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

inline Pts lattice_pts(const unicov::Lattice& l) {
  Pts out;
  for (auto& v : unicov::lattice_points(l, 1 << 22)) out.insert(v);
  return out;
}

inline std::vector<std::vector<int64_t>> dense_rows(const unicov::Lattice& l) {
  std::vector<std::vector<int64_t>> out;
  for (const auto& r : l.rows) out.push_back(unicov::make_dense(r, l.ambient));
  return out;
}

}  // namespace brute
