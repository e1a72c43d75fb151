#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace unicov {

// entries sorted by column index, values normalized into [1, mod)
using SparseRow = std::vector<std::pair<int32_t, int64_t>>;

// runtime switch for the OpenMP paths; serial and parallel kernels produce
// bitwise identical results, see bench/bench_kernels.cpp
void set_parallel_kernels(bool on);
bool parallel_kernels();

int64_t mod_reduce(int64_t v, int64_t m);

struct Xgcd { int64_t g, a, b; };  // a*x + b*y = g
Xgcd xgcd(int64_t x, int64_t y);

int64_t inv_mod(int64_t v, int64_t m);   // v must be a unit mod m
// unit u with u*v == gcd(v, m) (mod m)
int64_t unit_for(int64_t v, int64_t m);

SparseRow make_sparse(const std::vector<int64_t>& dense, int64_t mod);
std::vector<int64_t> make_dense(const SparseRow& r, int ambient);
SparseRow scale_row(const SparseRow& r, int64_t c, int64_t mod);
SparseRow add_scaled(const SparseRow& a, const SparseRow& b, int64_t c, int64_t mod);

// canonical basis of a submodule of (Z/mod)^ambient: rows sorted by pivot
// column, pivot values divide mod, entries above a pivot are reduced modulo
// that pivot value; the form is unique per submodule
struct Lattice {
  int ambient = 0;
  int64_t mod = 1;
  std::vector<SparseRow> rows;
  std::vector<int32_t> pivot_col;
  std::vector<int64_t> pivot_val;

  int rank() const { return int(rows.size()); }
  bool operator==(const Lattice&) const = default;
  // reduce v against the basis; zero residue means membership
  SparseRow reduce(const SparseRow& v) const;
  bool contains(const SparseRow& v) const { return reduce(v).empty(); }
  bool contains_lattice(const Lattice& other) const;
  // coefficients c over the basis rows with sum c_i row_i == v
  std::optional<std::vector<int64_t>> solve(const SparseRow& v) const;
  int64_t exponent() const;  // lcm of row orders; 1 for the zero module
};
// exact |l| lives in intmatrix.hpp (lattice_point_count) to keep the big-int
// dependency out of this header

class HowellBuilder {
 public:
  HowellBuilder(int ambient, int64_t mod);
  explicit HowellBuilder(const Lattice& start);
  void add(SparseRow r);
  void add_batch(std::vector<SparseRow> rows);  // parallel pre-reduction path
  Lattice finish();

 private:
  void insert(SparseRow r);
  SparseRow reduce_frozen(const SparseRow& r) const;

  int ambient_;
  int64_t mod_;
  std::vector<SparseRow> rows_;      // by pivot slot, may be empty
  std::vector<int32_t> slot_;       // column -> index into rows_, -1 if none
  std::vector<int64_t> scratch_;    // dense work row
};

Lattice howell(int ambient, int64_t mod, std::vector<SparseRow> rows);
// all vectors orthogonal to l: {z : z.x == 0 mod m for all x in l}
Lattice perp(const Lattice& l);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
// solution module of A x == 0 (mod m), rows of a living in (Z/m)^ambient
Lattice kernel_of_rows(int ambient, int64_t mod, std::vector<SparseRow> rows);
// same, for a row space already in canonical form
Lattice kernel_of_lattice(const Lattice& l);
Lattice zero_lattice(int ambient, int64_t mod);
Lattice full_lattice(int ambient, int64_t mod);
// every member as a dense vector, sorted; throws past the cap
std::vector<std::vector<int64_t>> lattice_points(const Lattice& l, size_t cap);

// dense Smith form over Z/mod: diag entries divide mod and each other in
// order; col_transform V and its inverse satisfy (up to the row operations)
// span(rows(A)) = span(rows(diag . Vinv))
struct SmithModResult {
  std::vector<int64_t> diag;                    // length = cols
  std::vector<std::vector<int64_t>> v;          // cols x cols
  std::vector<std::vector<int64_t>> vinv;
};
SmithModResult snf_mod(std::vector<std::vector<int64_t>> a, int64_t mod);

// structure of big/small for small <= big: invariant factors > 1 in
// ascending divisibility order, component generators, and a decomposition
// map for arbitrary members of big
struct QuotientDecomp {
  std::vector<int64_t> invariants;
  std::vector<SparseRow> generators;        // one per invariant, members of big
  // decompose x (member of big) into component exponents
  std::vector<int64_t> decompose(const Lattice& big, const SparseRow& x) const;

  std::vector<std::vector<int64_t>> v_cols;  // V columns for kept components
};
QuotientDecomp quotient_invariants(const Lattice& big, const Lattice& small);

}  // namespace unicov
