#include "unicover/multiplier.hpp"

#include <numeric>
#include <stdexcept>

#include "unicover/intmatrix.hpp"

namespace unicov {

int64_t MultiplierData::order() const {
  int64_t o = 1;
  for (int64_t d : classes.invariants) o *= d;
  return o;
}

std::vector<int64_t> MultiplierData::class_decompose(const Cocycle& a) const {
  if (a.mod != spaces.w) throw std::invalid_argument("cocycle modulus mismatch");
  return classes.decompose(spaces.zu, a.sparse());
}

Cocycle MultiplierData::generator(size_t i) const {
  return Cocycle::from_sparse(spaces.g->order(), spaces.w, classes.generators.at(i));
}

MultiplierData schur_multiplier(const FiniteGroup& g) {
  MultiplierData md;
  md.spaces = compute_spaces(g);
  md.classes = quotient_invariants(md.spaces.zu, md.spaces.bu);
  return md;
}

int64_t unitary_cover_exponent(const MultiplierData& md) {
  return std::lcm(md.spaces.zu.exponent(), int64_t(md.spaces.g->exponent()));
}

std::vector<int64_t> abelian_multiplier_invariants(const std::vector<long>& inv) {
  std::vector<int64_t> out;
  size_t k = inv.size();
  for (size_t i = 0; i + 1 < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (inv[i] > 1) out.push_back(inv[i]);
  return out;
}

std::vector<int64_t> homology_multiplier(const FiniteGroup& g) {
  int n = g.order();
  if (n > 32) throw std::invalid_argument("homology oracle capped at group order 32");
  if (n == 1) return {};
  int c = (n - 1) * (n - 1);
  int64_t a = n;

  // boundary of [g|h]: [h] - [gh] + [g], degenerate targets dropped
  BigMatrix d2(n - 1, std::vector<BigInt>(c, 0));
  for (Elt x = 1; x < n; ++x)
    for (Elt y = 1; y < n; ++y) {
      int32_t col = pair_index(n, x, y);
      d2[y - 1][col] += 1;
      d2[x - 1][col] += 1;
      Elt xy = g.mul(x, y);
      if (xy != 0) d2[xy - 1][col] -= 1;
    }
  BigMatrix ker = integer_kernel(d2);

  std::vector<SparseRow> kr;
  kr.reserve(ker.size());
  for (const auto& row : ker) {
    std::vector<int64_t> dense(c);
    for (int j = 0; j < c; ++j) dense[j] = int64_t(row[j] % a);
    kr.push_back(make_sparse(dense, a));
  }
  Lattice big = howell(c, a, std::move(kr));

  // boundary of [g|h|k]: [h|k] - [gh|k] + [g|hk] - [g|h]
  std::vector<SparseRow> im;
  im.reserve(size_t(n - 1) * (n - 1) * (n - 1));
  for (Elt x = 1; x < n; ++x)
    for (Elt y = 1; y < n; ++y) {
      Elt xy = g.mul(x, y);
      for (Elt z = 1; z < n; ++z) {
        std::vector<int64_t> dense(c, 0);
        auto bump = [&](Elt u, Elt v, int64_t s) {
          if (u != 0 && v != 0) dense[pair_index(n, u, v)] += s;
        };
        bump(y, z, 1);
        bump(xy, z, -1);
        bump(x, g.mul(y, z), 1);
        bump(x, y, -1);
        SparseRow r = make_sparse(dense, a);
        if (!r.empty()) im.push_back(std::move(r));
      }
    }
  Lattice small = howell(c, a, std::move(im));

  QuotientDecomp q = quotient_invariants(big, small);
  return q.invariants;
}

}  // namespace unicov
