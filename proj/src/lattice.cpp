#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "unicover/modmatrix.hpp"

namespace unicov {

namespace {

struct SnfWork {
  int r, c;
  int64_t m;
  std::vector<std::vector<int64_t>>& d;
  std::vector<std::vector<int64_t>>& v;
  std::vector<std::vector<int64_t>>& vinv;

  void col_swap(int j, int k) {
    for (int i = 0; i < r; ++i) std::swap(d[i][j], d[i][k]);
    for (int i = 0; i < c; ++i) std::swap(v[i][j], v[i][k]);
    std::swap(vinv[j], vinv[k]);
  }
  // col_j += q * col_k
  void col_add(int j, int k, int64_t q) {
    q = mod_reduce(q, m);
    for (int i = 0; i < r; ++i) d[i][j] = mod_reduce(d[i][j] + q * d[i][k], m);
    for (int i = 0; i < c; ++i) v[i][j] = mod_reduce(v[i][j] + q * v[i][k], m);
    for (int i = 0; i < c; ++i) vinv[k][i] = mod_reduce(vinv[k][i] - q * vinv[j][i], m);
  }
  // [col_j, col_l] <- [a col_j + b col_l, -(y/g) col_j + (x/g) col_l]
  void col_combine(int j, int l, int64_t x, int64_t y) {
    auto e = xgcd(x, y);
    int64_t a = mod_reduce(e.a, m), b = mod_reduce(e.b, m);
    int64_t nb = mod_reduce(-(y / e.g), m), nd = mod_reduce(x / e.g, m);
    auto upd_cols = [&](std::vector<std::vector<int64_t>>& mat, int nrows) {
      for (int i = 0; i < nrows; ++i) {
        int64_t cj = mat[i][j], cl = mat[i][l];
        mat[i][j] = mod_reduce(cj * a + cl * b, m);
        mat[i][l] = mod_reduce(cj * nb + cl * nd, m);
      }
    };
    upd_cols(d, r);
    upd_cols(v, c);
    // inverse of [[a, nb], [b, nd]] with det 1 is [[nd, -nb], [-b, a]]
    for (int i = 0; i < c; ++i) {
      int64_t rj = vinv[j][i], rl = vinv[l][i];
      vinv[j][i] = mod_reduce(nd * rj - nb * rl, m);
      vinv[l][i] = mod_reduce(-b * rj + a * rl, m);
    }
  }
  void row_swap(int i, int k) { std::swap(d[i], d[k]); }
  void row_add(int i, int k, int64_t q) {  // row_i += q * row_k
    q = mod_reduce(q, m);
    for (int j = 0; j < c; ++j) d[i][j] = mod_reduce(d[i][j] + q * d[k][j], m);
  }
  void row_combine(int i, int l, int64_t x, int64_t y) {
    auto e = xgcd(x, y);
    int64_t a = mod_reduce(e.a, m), b = mod_reduce(e.b, m);
    int64_t nc = mod_reduce(-(y / e.g), m), nd = mod_reduce(x / e.g, m);
    for (int j = 0; j < c; ++j) {
      int64_t ri = d[i][j], rl = d[l][j];
      d[i][j] = mod_reduce(a * ri + b * rl, m);
      d[l][j] = mod_reduce(nc * ri + nd * rl, m);
    }
  }
  void row_scale_unit(int i, int64_t u) {
    for (int j = 0; j < c; ++j) d[i][j] = mod_reduce(d[i][j] * u, m);
  }
};

}  // namespace

SmithModResult snf_mod(std::vector<std::vector<int64_t>> a, int64_t m) {
  int r = int(a.size());
  int c = r ? int(a[0].size()) : 0;
  for (auto& row : a)
    for (auto& x : row) x = mod_reduce(x, m);
  std::vector<std::vector<int64_t>> v(c, std::vector<int64_t>(c, 0));
  std::vector<std::vector<int64_t>> vinv(c, std::vector<int64_t>(c, 0));
  for (int i = 0; i < c; ++i) v[i][i] = vinv[i][i] = 1;
  SnfWork w{r, c, m, a, v, vinv};

  int rank = std::min(r, c);
  for (int k = 0; k < rank; ++k) {
    // pivot: entry with the smallest gcd with m
    int64_t best = 0;
    int bi = -1, bj = -1;
    for (int i = k; i < r; ++i)
      for (int j = k; j < c; ++j) {
        if (!a[i][j]) continue;
        int64_t g = std::gcd(a[i][j], m);
        if (bi < 0 || g < best) { best = g; bi = i; bj = j; }
      }
    if (bi < 0) { rank = k; break; }
    w.row_swap(k, bi);
    w.col_swap(k, bj);
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = k + 1; i < r; ++i) {
        int64_t y = a[i][k];
        if (!y) continue;
        int64_t x = a[k][k];
        if (y % x == 0) w.row_add(i, k, -(y / x));
        else { w.row_combine(k, i, x, y); dirty = true; }
      }
      for (int j = k + 1; j < c; ++j) {
        int64_t y = a[k][j];
        if (!y) continue;
        int64_t x = a[k][k];
        if (y % x == 0) w.col_add(j, k, -(y / x));
        else { w.col_combine(k, j, x, y); dirty = true; }
      }
    }
    w.row_scale_unit(k, unit_for(a[k][k], m));
  }
  // pairwise gcd/lcm merges until the diagonal forms a divisibility chain
  auto val = [&](int j) { return j < rank ? a[j][j] : 0; };
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int i = 0; i + 1 < rank; ++i) {
      int64_t x = val(i), y = val(i + 1);
      int64_t gx = x ? std::gcd(x, m) : m, gy = y ? std::gcd(y, m) : m;
      if (gy % gx == 0) continue;
      dirty = true;
      w.col_add(i, i + 1, 1);                 // d[i+1][i] = y
      w.row_combine(i, i + 1, x, y);          // diag -> (g, lcm), fill at (i, i+1)
      int64_t g = a[i][i];
      int64_t f = a[i][i + 1];
      if (f % g) throw std::logic_error("snf chain fix: non-divisible fill");
      if (f) w.col_add(i + 1, i, -(f / g));
      w.row_scale_unit(i, unit_for(a[i][i], m));
      w.row_scale_unit(i + 1, unit_for(a[i + 1][i + 1], m));
    }
  }
  SmithModResult out;
  out.diag.assign(c, m);
  for (int j = 0; j < rank; ++j) out.diag[j] = a[j][j] ? std::gcd(a[j][j], m) : m;
  out.v = std::move(v);
  out.vinv = std::move(vinv);
  return out;
}

std::vector<int64_t> QuotientDecomp::decompose(const Lattice& big, const SparseRow& x) const {
  auto coeff = big.solve(x);
  if (!coeff) throw std::invalid_argument("decompose: not a member of the big lattice");
  std::vector<int64_t> out(invariants.size(), 0);
  for (size_t t = 0; t < invariants.size(); ++t) {
    int64_t s = 0;
    for (size_t i = 0; i < coeff->size(); ++i)
      s = mod_reduce(s + (*coeff)[i] * v_cols[t][i], big.mod);
    out[t] = mod_reduce(s, invariants[t]);
  }
  return out;
}

QuotientDecomp quotient_invariants(const Lattice& big, const Lattice& small) {
  if (big.ambient != small.ambient || big.mod != small.mod)
    throw std::invalid_argument("quotient_invariants shape mismatch");
  int k = big.rank();
  QuotientDecomp out;
  if (k == 0) {
    if (small.rank()) throw std::invalid_argument("small is not inside big");
    return out;
  }
  int64_t m = big.mod;
  // relations on big's basis coordinates: images of small's generators plus
  // the coordinate kernel of the basis map (Z/m)^k -> big
  std::vector<std::vector<int64_t>> rel;
  for (const auto& s : small.rows) {
    auto c = big.solve(s);
    if (!c) throw std::invalid_argument("small is not inside big");
    rel.push_back(std::move(*c));
  }
  for (int i = 0; i < k; ++i) {
    int64_t ann = m / big.pivot_val[i];
    auto lam = big.solve(scale_row(big.rows[i], ann, m));
    if (!lam) throw std::logic_error("howell basis is not annihilator-closed");
    std::vector<int64_t> row(k, 0);
    for (int j = 0; j < k; ++j) row[j] = mod_reduce(-(*lam)[j], m);
    row[i] = mod_reduce(row[i] + ann, m);
    rel.push_back(std::move(row));
  }
  SmithModResult s = snf_mod(rel, m);
  for (int j = 0; j < k; ++j) {
    if (s.diag[j] <= 1) continue;
    out.invariants.push_back(s.diag[j]);
    std::vector<int64_t> vcol(k);
    for (int i = 0; i < k; ++i) vcol[i] = s.v[i][j];
    out.v_cols.push_back(std::move(vcol));
    // generator: row j of V^-1 expressed through big's basis rows
    SparseRow gen;
    for (int i = 0; i < k; ++i)
      if (s.vinv[j][i]) gen = add_scaled(gen, big.rows[i], s.vinv[j][i], m);
    out.generators.push_back(std::move(gen));
  }
  return out;
}

}  // namespace unicov
