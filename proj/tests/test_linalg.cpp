#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "support/brute.hpp"
#include "unicover/intmatrix.hpp"
#include "unicover/modmatrix.hpp"

using namespace unicov;

namespace {

SparseRow row_of(const std::vector<int64_t>& v, int64_t m) { return make_sparse(v, m); }

std::vector<std::vector<int64_t>> random_gens(std::mt19937& rng, int count, int n,
                                              int64_t m) {
  std::vector<std::vector<int64_t>> out(count, std::vector<int64_t>(n));
  for (auto& g : out)
    for (auto& x : g) x = int64_t(rng() % uint64_t(m));
  return out;
}

}  // namespace

TEST_CASE("xgcd and unit_for identities") {
  for (int64_t x = -40; x <= 40; ++x)
    for (int64_t y = -40; y <= 40; ++y) {
      auto e = xgcd(x, y);
      CHECK(e.a * x + e.b * y == e.g);
      CHECK(e.g == std::gcd(x, y));
      CHECK(e.g >= 0);
    }
  for (int64_t m = 2; m <= 30; ++m)
    for (int64_t v = 0; v < m; ++v) {
      int64_t u = unit_for(v, m);
      CHECK(std::gcd(u, m) == 1);
      CHECK(mod_reduce(u * v, m) == std::gcd(v, m) % m);
    }
}

TEST_CASE("mod_reduce matches the mathematical residue") {
  for (int64_t m : {2, 3, 7, 8, 12, 16, 1024}) {
    for (int64_t v = -3 * m; v <= 3 * m; ++v) {
      int64_t r = mod_reduce(v, m);
      CHECK(r >= 0);
      CHECK(r < m);
      CHECK((v - r) % m == 0);
    }
  }
}

TEST_CASE("howell span equals brute span on small modules") {
  std::mt19937 rng(7);
  for (int64_t m : {4, 6, 8, 9, 12}) {
    for (int n = 1; n <= 3; ++n) {
      for (int rep = 0; rep < 12; ++rep) {
        auto gens = random_gens(rng, 1 + int(rng() % 3), n, m);
        std::vector<SparseRow> rows;
        for (auto& g : gens) rows.push_back(row_of(g, m));
        Lattice l = howell(n, m, rows);
        CHECK(brute::lattice_pts(l) == brute::span(n, m, gens));
        // membership agrees with reduction
        for (auto& p : brute::span(n, m, gens)) CHECK(l.contains(row_of(p, m)));
      }
    }
  }
}

TEST_CASE("howell form is canonical under insertion order") {
  int64_t m = 12;
  std::vector<std::vector<int64_t>> gens = {{2, 4, 0}, {3, 3, 6}, {0, 0, 4}, {6, 2, 2}};
  std::vector<int> perm = {0, 1, 2, 3};
  Lattice first;
  bool have = false;
  do {
    std::vector<SparseRow> rows;
    for (int i : perm) rows.push_back(row_of(gens[i], m));
    Lattice l = howell(3, m, rows);
    if (!have) {
      first = l;
      have = true;
    } else {
      CHECK(l == first);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("kernel and perp match brute enumeration") {
  std::mt19937 rng(11);
  for (int64_t m : {4, 8, 9, 12}) {
    for (int rep = 0; rep < 8; ++rep) {
      int n = 3;
      auto rows_dense = random_gens(rng, 2, n, m);
      std::vector<SparseRow> rows;
      for (auto& r : rows_dense) rows.push_back(row_of(r, m));
      Lattice k = kernel_of_rows(n, m, rows);
      CHECK(brute::lattice_pts(k) == brute::kernel(n, m, rows_dense));
      Lattice l = howell(n, m, rows);
      CHECK(kernel_of_lattice(l) == k);
      // perp of the span, and the double perp recovers the span
      Lattice p = perp(l);
      CHECK(brute::lattice_pts(p) == brute::perp(n, m, brute::lattice_pts(l)));
      CHECK(perp(p) == l);
    }
  }
}

TEST_CASE("sum and intersection match brute point sets") {
  std::mt19937 rng(13);
  int64_t m = 8;
  int n = 3;
  for (int rep = 0; rep < 10; ++rep) {
    auto ga = random_gens(rng, 2, n, m);
    auto gb = random_gens(rng, 2, n, m);
    std::vector<SparseRow> ra, rb;
    for (auto& g : ga) ra.push_back(row_of(g, m));
    for (auto& g : gb) rb.push_back(row_of(g, m));
    Lattice a = howell(n, m, ra), b = howell(n, m, rb);
    auto pa = brute::lattice_pts(a), pb = brute::lattice_pts(b);
    auto both = ga;
    both.insert(both.end(), gb.begin(), gb.end());
    CHECK(brute::lattice_pts(lattice_sum(a, b)) == brute::span(n, m, both));
    CHECK(brute::lattice_pts(lattice_intersect(a, b)) == brute::intersect(pa, pb));
  }
}

TEST_CASE("lattice solve and exponent") {
  Lattice l = howell(1, 4, {row_of({2}, 4)});
  CHECK_FALSE(l.solve(row_of({1}, 4)).has_value());
  auto c = l.solve(row_of({2}, 4));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 1);

  CHECK(howell(2, 8, {row_of({2, 0}, 8)}).exponent() == 4);
  CHECK(full_lattice(2, 8).exponent() == 8);
  CHECK(zero_lattice(2, 8).exponent() == 1);
}

TEST_CASE("dense smith form over Z/m") {
  auto r = snf_mod({{2, 4}, {4, 2}}, 12);
  REQUIRE(r.diag.size() == 2);
  CHECK(r.diag[0] == 2);
  CHECK(r.diag[1] == 6);
  // diag entries divide the modulus and each other
  CHECK(12 % r.diag[1] == 0);
  CHECK(r.diag[1] % r.diag[0] == 0);
}

TEST_CASE("quotient invariants with exact generator orders") {
  int64_t m = 4;
  Lattice big = full_lattice(2, m);
  Lattice small = howell(2, m, {row_of({2, 0}, m), row_of({0, 2}, m)});
  QuotientDecomp q = quotient_invariants(big, small);
  CHECK(q.invariants == std::vector<int64_t>{2, 2});

  // decompose returns coordinates that reconstruct the class
  for (auto& p : brute::lattice_pts(big)) {
    SparseRow pr = row_of(p, m);
    auto coords = q.decompose(big, pr);
    REQUIRE(coords.size() == q.generators.size());
    SparseRow acc;
    for (size_t i = 0; i < coords.size(); ++i)
      acc = add_scaled(acc, q.generators[i], coords[i], m);
    SparseRow diff = add_scaled(pr, acc, m - 1, m);
    CHECK(small.contains(diff));
  }

  Lattice big2 = howell(2, m, {row_of({1, 0}, m), row_of({0, 2}, m)});
  QuotientDecomp q2 = quotient_invariants(big2, zero_lattice(2, m));
  CHECK(q2.invariants == std::vector<int64_t>{2, 4});
}

TEST_CASE("integer hermite and kernel behave on a known matrix") {
  BigMatrix a = {{2, 4}, {4, 2}};
  auto h = hermite_form(a);
  CHECK(h[0][0] == 2);
  CHECK(h[1][1] == 6);
  BigMatrix b = {{1, 2, 3}, {2, 4, 6}};
  auto k = integer_kernel(b);
  REQUIRE(!k.empty());
  for (auto& row : k) {
    for (size_t j = 0; j < b.size(); ++j) {
      BigInt s = 0;
      for (size_t i = 0; i < row.size(); ++i) s += row[i] * b[j][i];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("parallel batch insertion is bitwise identical to serial") {
  std::mt19937 rng(17);
  int n = 40;
  int64_t m = 24;
  std::vector<SparseRow> rows;
  for (int i = 0; i < 200; ++i) {
    std::vector<int64_t> v(n, 0);
    for (int j = 0; j < 6; ++j) v[rng() % n] = int64_t(rng() % uint64_t(m));
    rows.push_back(row_of(v, m));
  }
  set_parallel_kernels(false);
  Lattice serial = howell(n, m, rows);
  set_parallel_kernels(true);
  Lattice parallel = howell(n, m, rows);
  set_parallel_kernels(true);
  CHECK(serial == parallel);
}

TEST_CASE("lattice point count matches enumeration") {
  Lattice l = howell(3, 12, {row_of({2, 0, 6}, 12), row_of({0, 3, 3}, 12)});
  CHECK(lattice_point_count(l) == BigInt(int64_t(brute::lattice_pts(l).size())));
}
