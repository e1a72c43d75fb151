#include "unicover/intmatrix.hpp"

#include <stdexcept>

namespace unicov {

namespace {

// returns true if the matrix row is zero in columns [0, width)
bool zero_prefix(const std::vector<BigInt>& row, size_t width) {
  for (size_t j = 0; j < width; ++j)
    if (row[j] != 0) return false;
  return true;
}

}  // namespace

BigMatrix hermite_form(BigMatrix a) {
  if (a.empty()) return a;
  size_t r = a.size(), c = a[0].size();
  size_t pr = 0;  // next pivot row
  for (size_t j = 0; j < c && pr < r; ++j) {
    // clear column j below pr with gcd combines
    for (size_t i = pr + 1; i < r; ++i) {
      if (a[i][j] == 0) continue;
      if (a[pr][j] == 0) { std::swap(a[pr], a[i]); continue; }
      BigInt x = a[pr][j], y = a[i][j];
      BigInt g, s, t;
      g = boost::multiprecision::gcd(x, y);
      // extended gcd
      {
        BigInt r0 = x, r1 = y, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
        while (r1 != 0) {
          BigInt q = r0 / r1;
          r0 -= q * r1; std::swap(r0, r1);
          a0 -= q * a1; std::swap(a0, a1);
          b0 -= q * b1; std::swap(b0, b1);
        }
        if (r0 < 0) { r0 = -r0; a0 = -a0; b0 = -b0; }
        g = r0; s = a0; t = b0;
      }
      BigInt xg = x / g, yg = y / g;
      for (size_t l = 0; l < c; ++l) {
        BigInt u = a[pr][l], v = a[i][l];
        a[pr][l] = s * u + t * v;
        a[i][l] = -yg * u + xg * v;
      }
    }
    if (a[pr][j] == 0) continue;
    if (a[pr][j] < 0)
      for (size_t l = 0; l < c; ++l) a[pr][l] = -a[pr][l];
    // reduce entries above the pivot into [0, pivot)
    for (size_t i = 0; i < pr; ++i) {
      if (a[i][j] == 0) continue;
      BigInt q = a[i][j] / a[pr][j];
      if (a[i][j] - q * a[pr][j] < 0) q -= 1;
      if (q != 0)
        for (size_t l = 0; l < c; ++l) a[i][l] -= q * a[pr][l];
    }
    ++pr;
  }
  return a;
}

BigMatrix integer_kernel(const BigMatrix& a) {
  if (a.empty()) return {};
  size_t r = a.size(), c = a[0].size();
  // HNF of [a^T | I]; rows with zero first block carry the kernel of x -> a x
  BigMatrix m(c, std::vector<BigInt>(r + c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m[j][i] = a[i][j];
  for (size_t j = 0; j < c; ++j) m[j][r + j] = 1;
  BigMatrix h = hermite_form(std::move(m));
  BigMatrix out;
  for (const auto& row : h) {
    if (!zero_prefix(row, r)) continue;
    std::vector<BigInt> k(row.begin() + r, row.end());
    bool nz = false;
    for (const auto& x : k)
      if (x != 0) { nz = true; break; }
    if (nz) out.push_back(std::move(k));
  }
  return out;
}

SmithResult smith_form(BigMatrix a) {
  size_t r = a.size(), c = r ? a[0].size() : 0;
  BigMatrix u(r, std::vector<BigInt>(r, 0)), v(c, std::vector<BigInt>(c, 0));
  for (size_t i = 0; i < r; ++i) u[i][i] = 1;
  for (size_t i = 0; i < c; ++i) v[i][i] = 1;
  size_t rank = std::min(r, c);
  for (size_t k = 0; k < rank; ++k) {
    // move a nonzero entry of minimal magnitude to (k, k)
    size_t bi = k, bj = k;
    bool found = false;
    for (size_t i = k; i < r; ++i)
      for (size_t j = k; j < c; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || abs(a[i][j]) < abs(a[bi][bj])) { bi = i; bj = j; found = true; }
      }
    if (!found) { rank = k; break; }
    std::swap(a[k], a[bi]);
    std::swap(u[k], u[bi]);
    for (size_t i = 0; i < r; ++i) std::swap(a[i][k], a[i][bj]);
    for (size_t i = 0; i < c; ++i) std::swap(v[i][k], v[i][bj]);
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (size_t i = k + 1; i < r; ++i) {
        if (a[i][k] == 0) continue;
        BigInt q = a[i][k] / a[k][k];
        for (size_t l = 0; l < c; ++l) a[i][l] -= q * a[k][l];
        for (size_t l = 0; l < r; ++l) u[i][l] -= q * u[k][l];
        if (a[i][k] != 0) { std::swap(a[k], a[i]); std::swap(u[k], u[i]); dirty = true; }
      }
      for (size_t j = k + 1; j < c; ++j) {
        if (a[k][j] == 0) continue;
        BigInt q = a[k][j] / a[k][k];
        for (size_t l = 0; l < r; ++l) a[l][j] -= q * a[l][k];
        for (size_t l = 0; l < c; ++l) v[l][j] -= q * v[l][k];
        if (a[k][j] != 0) {
          for (size_t l = 0; l < r; ++l) std::swap(a[l][k], a[l][j]);
          for (size_t l = 0; l < c; ++l) std::swap(v[l][k], v[l][j]);
          dirty = true;
        }
      }
    }
    if (a[k][k] < 0) {
      for (size_t l = 0; l < c; ++l) a[k][l] = -a[k][l];
      for (size_t l = 0; l < r; ++l) u[k][l] = -u[k][l];
    }
  }
  // enforce the divisibility chain on the diagonal
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (size_t i = 0; i + 1 < rank; ++i) {
      if (a[i][i] == 0 || a[i + 1][i + 1] % a[i][i] == 0) continue;
      dirty = true;
      // col_i += col_{i+1}, then re-clear the 2x2 block
      for (size_t l = 0; l < r; ++l) a[l][i] += a[l][i + 1];
      for (size_t l = 0; l < c; ++l) v[l][i] += v[l][i + 1];
      BigInt x = a[i][i], y = a[i + 1][i];
      BigInt r0 = x, r1 = y, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
      while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        a0 -= q * a1; std::swap(a0, a1);
        b0 -= q * b1; std::swap(b0, b1);
      }
      if (r0 < 0) { r0 = -r0; a0 = -a0; b0 = -b0; }
      BigInt xg = x / r0, yg = y / r0;
      for (size_t l = 0; l < c; ++l) {
        BigInt p = a[i][l], q2 = a[i + 1][l];
        a[i][l] = a0 * p + b0 * q2;
        a[i + 1][l] = -yg * p + xg * q2;
      }
      for (size_t l = 0; l < r; ++l) {
        BigInt p = u[i][l], q2 = u[i + 1][l];
        u[i][l] = a0 * p + b0 * q2;
        u[i + 1][l] = -yg * p + xg * q2;
      }
      BigInt f = a[i][i + 1];
      if (f % a[i][i] != 0) throw std::logic_error("smith chain fix: non-divisible fill");
      BigInt q = f / a[i][i];
      for (size_t l = 0; l < r; ++l) a[l][i + 1] -= q * a[l][i];
      for (size_t l = 0; l < c; ++l) v[l][i + 1] -= q * v[l][i];
      if (a[i + 1][i + 1] < 0) {
        for (size_t l = 0; l < c; ++l) a[i + 1][l] = -a[i + 1][l];
        for (size_t l = 0; l < r; ++l) u[i + 1][l] = -u[i + 1][l];
      }
    }
  }
  SmithResult out;
  out.diag.assign(std::min(r, c), 0);
  for (size_t k = 0; k < rank; ++k) out.diag[k] = a[k][k];
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

BigInt bareiss_det(BigMatrix a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (a[0].size() != n) throw std::invalid_argument("bareiss_det needs a square matrix");
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt lattice_point_count(const Lattice& l) {
  BigInt n = 1;
  for (int64_t d : l.pivot_val) n *= l.mod / d;
  return n;
}

}  // namespace unicov
