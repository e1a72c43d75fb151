#include "unicover/modmatrix.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace unicov {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel_kernels(bool on) { g_parallel.store(on); }
bool parallel_kernels() {
#ifdef _OPENMP
  return g_parallel.load();
#else
  return false;
#endif
}

int64_t mod_reduce(int64_t v, int64_t m) {
  // two's complement makes the mask correct for negative v as well
  if ((m & (m - 1)) == 0) return v & (m - 1);
  v %= m;
  return v < 0 ? v + m : v;
}

Xgcd xgcd(int64_t x, int64_t y) {
  // invariant: r0 = a0*x + b0*y, r1 = a1*x + b1*y
  int64_t r0 = x, r1 = y, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    r0 -= q * r1; std::swap(r0, r1);
    a0 -= q * a1; std::swap(a0, a1);
    b0 -= q * b1; std::swap(b0, b1);
  }
  if (r0 < 0) { r0 = -r0; a0 = -a0; b0 = -b0; }
  return {r0, a0, b0};
}

int64_t inv_mod(int64_t v, int64_t m) {
  auto e = xgcd(mod_reduce(v, m), m);
  if (e.g != 1) throw std::invalid_argument("inv_mod of a non-unit");
  return mod_reduce(e.a, m);
}

int64_t unit_for(int64_t v, int64_t m) {
  v = mod_reduce(v, m);
  if (v == 0) return 1;
  int64_t g = std::gcd(v, m);
  int64_t m1 = m / g;
  if (m1 == 1) return 1;
  int64_t u = inv_mod(v / g, m1);
  if (u == 0) u = m1;  // keep u nonzero
  while (std::gcd(u, m) != 1) u += m1;
  return u;
}

SparseRow make_sparse(const std::vector<int64_t>& dense, int64_t mod) {
  SparseRow r;
  for (size_t i = 0; i < dense.size(); ++i) {
    int64_t v = mod_reduce(dense[i], mod);
    if (v) r.push_back({int32_t(i), v});
  }
  return r;
}

std::vector<int64_t> make_dense(const SparseRow& r, int ambient) {
  std::vector<int64_t> d(ambient, 0);
  for (auto [c, v] : r) d[c] = v;
  return d;
}

SparseRow scale_row(const SparseRow& r, int64_t c, int64_t mod) {
  c = mod_reduce(c, mod);
  SparseRow out;
  out.reserve(r.size());
  for (auto [col, v] : r) {
    int64_t w = mod_reduce(v * c, mod);
    if (w) out.push_back({col, w});
  }
  return out;
}

SparseRow add_scaled(const SparseRow& a, const SparseRow& b, int64_t c, int64_t mod) {
  c = mod_reduce(c, mod);
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      int64_t w = mod_reduce(b[j].second * c, mod);
      if (w) out.push_back({b[j].first, w});
      ++j;
    } else {
      int64_t w = mod_reduce(a[i].second + b[j].second * c, mod);
      if (w) out.push_back({a[i].first, w});
      ++i; ++j;
    }
  }
  return out;
}

// --- Lattice members ---

SparseRow Lattice::reduce(const SparseRow& v) const {
  SparseRow out;
  SparseRow cur;
  for (auto [c, x] : v) {
    int64_t w = mod_reduce(x, mod);
    if (w) cur.push_back({c, w});
  }
  // rows are sorted by pivot; locate by binary search
  while (!cur.empty()) {
    auto [j, x] = cur.front();
    auto it = std::lower_bound(pivot_col.begin(), pivot_col.end(), j);
    if (it == pivot_col.end() || *it != j) {
      out.push_back(cur.front());
      cur.erase(cur.begin());
      continue;
    }
    size_t r = size_t(it - pivot_col.begin());
    int64_t d = pivot_val[r];
    int64_t q = x / d, rem = x % d;
    if (q) cur = add_scaled(cur, rows[r], mod - mod_reduce(q, mod), mod);
    if (rem) {
      out.push_back({j, rem});
      cur.erase(cur.begin());
    }
    // if rem == 0 the leading entry vanished inside add_scaled
  }
  return out;
}

bool Lattice::contains_lattice(const Lattice& other) const {
  for (const auto& r : other.rows)
    if (!contains(r)) return false;
  return true;
}

std::optional<std::vector<int64_t>> Lattice::solve(const SparseRow& v) const {
  std::vector<int64_t> coeff(rows.size(), 0);
  SparseRow cur;
  for (auto [c, x] : v) {
    int64_t w = mod_reduce(x, mod);
    if (w) cur.push_back({c, w});
  }
  while (!cur.empty()) {
    auto [j, x] = cur.front();
    auto it = std::lower_bound(pivot_col.begin(), pivot_col.end(), j);
    if (it == pivot_col.end() || *it != j) return std::nullopt;
    size_t r = size_t(it - pivot_col.begin());
    int64_t d = pivot_val[r];
    if (x % d) return std::nullopt;
    int64_t q = x / d;
    coeff[r] = mod_reduce(coeff[r] + q, mod);
    cur = add_scaled(cur, rows[r], mod - mod_reduce(q, mod), mod);
  }
  return coeff;
}

int64_t Lattice::exponent() const {
  int64_t e = 1;
  for (const auto& r : rows) {
    int64_t g = mod;
    for (auto [c, v] : r) g = std::gcd(g, v);
    int64_t o = mod / g;
    e = e / std::gcd(e, o) * o;
  }
  return e;
}

// --- HowellBuilder ---

HowellBuilder::HowellBuilder(int ambient, int64_t mod)
    : ambient_(ambient), mod_(mod), rows_(ambient), scratch_(ambient, 0) {
  if (mod < 1) throw std::invalid_argument("modulus must be positive");
  slot_.assign(ambient, -1);  // slot_[c] >= 0 iff rows_[c] is live
}

HowellBuilder::HowellBuilder(const Lattice& start)
    : HowellBuilder(start.ambient, start.mod) {
  for (size_t i = 0; i < start.rows.size(); ++i) {
    rows_[start.pivot_col[i]] = start.rows[i];
    slot_[start.pivot_col[i]] = 1;
  }
}

void HowellBuilder::add(SparseRow r) { insert(std::move(r)); }

void HowellBuilder::insert(SparseRow first) {
  std::deque<SparseRow> work;
  work.push_back(std::move(first));
  std::priority_queue<int32_t, std::vector<int32_t>, std::greater<>> heap;
  while (!work.empty()) {
    SparseRow v = std::move(work.front());
    work.pop_front();
    bool any = false;
    for (auto [c, x] : v) {
      int64_t w = mod_reduce(x, mod_);
      if (w) { scratch_[c] = mod_reduce(scratch_[c] + w, mod_); if (scratch_[c]) { heap.push(c); any = true; } }
    }
    if (!any) { while (!heap.empty()) { scratch_[heap.top()] = 0; heap.pop(); } continue; }
    while (!heap.empty()) {
      int32_t j = heap.top();
      heap.pop();
      int64_t x = scratch_[j];
      if (x == 0) continue;
      if (slot_[j] < 0) {
        // new pivot: unit-normalize so the leading value is gcd(x, mod)
        int64_t u = unit_for(x, mod_);
        SparseRow row;
        row.push_back({j, mod_reduce(x * u, mod_)});
        scratch_[j] = 0;
        int32_t last = j;
        while (!heap.empty()) {
          int32_t c = heap.top();
          heap.pop();
          if (c == last) continue;
          last = c;
          if (scratch_[c]) {
            int64_t w = mod_reduce(scratch_[c] * u, mod_);
            if (w) row.push_back({c, w});
            scratch_[c] = 0;
          }
        }
        int64_t g = row[0].second;
        rows_[j] = std::move(row);
        slot_[j] = 1;
        if (mod_ / g > 1) work.push_back(scale_row(rows_[j], mod_ / g, mod_));
        break;
      }
      const SparseRow& prow = rows_[j];
      int64_t d = prow[0].second;
      if (x % d == 0) {
        int64_t q = x / d;
        for (auto [c, w] : prow) {
          int64_t before = scratch_[c];
          scratch_[c] = mod_reduce(before - q * w, mod_);
          if (scratch_[c] && (before == 0)) heap.push(c);
        }
        // scratch_[j] is now zero by construction
        continue;
      }
      // pivot value does not divide: unimodular 2x2 combine
      SparseRow s;
      s.push_back({j, x});
      scratch_[j] = 0;
      int32_t last = j;
      while (!heap.empty()) {
        int32_t c = heap.top();
        heap.pop();
        if (c == last) continue;
        last = c;
        if (scratch_[c]) { s.push_back({c, scratch_[c]}); scratch_[c] = 0; }
      }
      auto e = xgcd(d, x);
      SparseRow p = add_scaled(scale_row(prow, e.a, mod_), s, e.b, mod_);
      // leading value of p is the gcd
      if (p.empty() || p[0].first != j || p[0].second != e.g)
        throw std::logic_error("howell combine lost its pivot");
      SparseRow r_res = add_scaled(prow, p, mod_ - mod_reduce(d / e.g, mod_), mod_);
      SparseRow s_res = add_scaled(s, p, mod_ - mod_reduce(x / e.g, mod_), mod_);
      rows_[j] = std::move(p);
      if (mod_ / e.g > 1) work.push_back(scale_row(rows_[j], mod_ / e.g, mod_));
      if (!r_res.empty()) work.push_back(std::move(r_res));
      if (!s_res.empty()) work.push_back(std::move(s_res));
      break;
    }
  }
}

SparseRow HowellBuilder::reduce_frozen(const SparseRow& r) const {
  SparseRow out, cur;
  for (auto [c, x] : r) {
    int64_t w = mod_reduce(x, mod_);
    if (w) cur.push_back({c, w});
  }
  while (!cur.empty()) {
    auto [j, x] = cur.front();
    if (slot_[j] < 0) {
      out.push_back(cur.front());
      cur.erase(cur.begin());
      continue;
    }
    const SparseRow& prow = rows_[j];
    int64_t d = prow[0].second;
    int64_t q = x / d, rem = x % d;
    if (q) cur = add_scaled(cur, prow, mod_ - mod_reduce(q, mod_), mod_);
    if (rem) {
      out.push_back({j, rem});
      cur.erase(cur.begin());
    }
  }
  return out;
}

void HowellBuilder::add_batch(std::vector<SparseRow> rows) {
  if (!parallel_kernels() || rows.size() < 64) {
    for (auto& r : rows) insert(std::move(r));
    return;
  }
  constexpr size_t kBatch = 256;
  for (size_t base = 0; base < rows.size(); base += kBatch) {
    size_t end = std::min(rows.size(), base + kBatch);
    // reduce the batch against the frozen basis in parallel, then insert
    // serially in order; the final canonical form is insertion-order
    // independent, so this matches the serial path bitwise
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = base; i < end; ++i) rows[i] = reduce_frozen(rows[i]);
    for (size_t i = base; i < end; ++i)
      if (!rows[i].empty()) insert(std::move(rows[i]));
  }
}

Lattice HowellBuilder::finish() {
  Lattice out;
  out.ambient = ambient_;
  out.mod = mod_;
  std::vector<int32_t> cols;
  for (int32_t c = 0; c < ambient_; ++c)
    if (slot_[c] >= 0) cols.push_back(c);
  // canonical pass: reduce every entry sitting in another row's pivot column
  // modulo that pivot value; each row's outcome depends only on its residue
  // class, so rows can be processed independently (and in parallel against a
  // frozen snapshot)
  std::vector<SparseRow> snap;
  bool par = parallel_kernels() && cols.size() >= 64;
  if (par) {
    snap.resize(ambient_);
    for (int32_t c : cols) snap[c] = rows_[c];
  }
  const std::vector<SparseRow>& basis = par ? snap : rows_;
  std::vector<SparseRow> result(cols.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (size_t i = 0; i < cols.size(); ++i) {
    int32_t pc = cols[i];
    SparseRow cur = par ? snap[pc] : rows_[pc];
    SparseRow done;
    done.push_back(cur[0]);
    cur.erase(cur.begin());
    while (!cur.empty()) {
      auto [j, x] = cur.front();
      if (slot_[j] < 0) {
        done.push_back(cur.front());
        cur.erase(cur.begin());
        continue;
      }
      int64_t d = basis[j][0].second;
      int64_t q = x / d, rem = x % d;
      if (q) cur = add_scaled(cur, basis[j], mod_ - mod_reduce(q, mod_), mod_);
      if (rem) {
        done.push_back({j, rem});
        cur.erase(cur.begin());
      }
    }
    result[i] = std::move(done);
    if (!par) rows_[pc] = result[i];
  }
  for (size_t i = 0; i < cols.size(); ++i) {
    out.rows.push_back(std::move(result[i]));
    out.pivot_col.push_back(cols[i]);
    out.pivot_val.push_back(out.rows.back()[0].second);
  }
  return out;
}

// --- free functions ---

Lattice howell(int ambient, int64_t mod, std::vector<SparseRow> rows) {
  HowellBuilder b(ambient, mod);
  b.add_batch(std::move(rows));
  return b.finish();
}

Lattice zero_lattice(int ambient, int64_t mod) {
  Lattice l;
  l.ambient = ambient;
  l.mod = mod;
  return l;
}

Lattice full_lattice(int ambient, int64_t mod) {
  Lattice l;
  l.ambient = ambient;
  l.mod = mod;
  for (int32_t c = 0; c < ambient; ++c) {
    l.rows.push_back({{c, 1}});
    l.pivot_col.push_back(c);
    l.pivot_val.push_back(1);
  }
  return l;
}

Lattice kernel_of_rows(int ambient, int64_t mod, std::vector<SparseRow> rows) {
  // kernel of x -> A x^T via the howell form of [A^T | I]: rows whose
  // A^T block vanished carry a canonical basis of the kernel in the I block
  if (int(rows.size()) > ambient) {
    // overdetermined input: replacing the rows by a basis of their span
    // keeps the kernel and shrinks the transposed system
    return kernel_of_lattice(howell(ambient, mod, std::move(rows)));
  }
  int nr = int(rows.size());
  std::vector<SparseRow> trows(ambient);
  for (int i = 0; i < nr; ++i)
    for (auto [c, v] : rows[i]) {
      int64_t w = mod_reduce(v, mod);
      if (w) trows[c].push_back({int32_t(i), w});
    }
  for (int t = 0; t < ambient; ++t) trows[t].push_back({int32_t(nr + t), 1});
  HowellBuilder b(nr + ambient, mod);
  b.add_batch(std::move(trows));
  Lattice all = b.finish();
  Lattice out;
  out.ambient = ambient;
  out.mod = mod;
  for (size_t i = 0; i < all.rows.size(); ++i) {
    if (all.pivot_col[i] < nr) continue;
    SparseRow r;
    for (auto [c, v] : all.rows[i]) r.push_back({int32_t(c - nr), v});
    out.pivot_col.push_back(int32_t(all.pivot_col[i] - nr));
    out.pivot_val.push_back(all.pivot_val[i]);
    out.rows.push_back(std::move(r));
  }
  return out;
}

Lattice kernel_of_lattice(const Lattice& l) {
  return kernel_of_rows(l.ambient, l.mod, l.rows);
}

std::vector<std::vector<int64_t>> lattice_points(const Lattice& l, size_t cap) {
  std::set<std::vector<int64_t>> seen;
  std::deque<std::vector<int64_t>> work;
  std::vector<int64_t> zero(l.ambient, 0);
  seen.insert(zero);
  work.push_back(std::move(zero));
  while (!work.empty()) {
    std::vector<int64_t> v = std::move(work.front());
    work.pop_front();
    for (const auto& r : l.rows) {
      std::vector<int64_t> u = v;
      for (auto [c, x] : r) u[c] = mod_reduce(u[c] + x, l.mod);
      if (seen.insert(u).second) {
        if (seen.size() > cap) throw std::invalid_argument("lattice too large to enumerate");
        work.push_back(std::move(u));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Lattice perp(const Lattice& l) { return kernel_of_rows(l.ambient, l.mod, l.rows); }

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient != b.ambient || a.mod != b.mod)
    throw std::invalid_argument("lattice_sum shape mismatch");
  HowellBuilder bld(a);
  bld.add_batch(b.rows);
  return bld.finish();
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  return perp(lattice_sum(perp(a), perp(b)));
}

}  // namespace unicov
