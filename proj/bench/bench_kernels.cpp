// timing comparison of the serial and OpenMP batch-reduction paths, plus a
// bitwise equality check of the resulting lattices
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "unicover/cocycle.hpp"
#include "unicover/group.hpp"
#include "unicover/multiplier.hpp"

using namespace unicov;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool lattices_equal(const CocycleSpaces& a, const CocycleSpaces& b) {
  return a.z2 == b.z2 && a.zu == b.zu && a.b2 == b.b2 && a.bu == b.bu;
}

void bench_group(const FiniteGroup& g) {
  set_parallel_kernels(false);
  auto t0 = std::chrono::steady_clock::now();
  CocycleSpaces serial = compute_spaces(g);
  double ts = seconds_since(t0);

  set_parallel_kernels(true);
  t0 = std::chrono::steady_clock::now();
  CocycleSpaces parallel = compute_spaces(g);
  double tp = seconds_since(t0);

  bool same = lattices_equal(serial, parallel);
  std::printf("%-12s order %3d  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              g.name().c_str(), g.order(), ts, tp, tp > 0 ? ts / tp : 0.0,
              same ? "bitwise equal" : "MISMATCH");
  if (!same) std::exit(1);
}

}  // namespace

int main() {
  std::printf("cocycle space kernels, serial vs parallel\n");
  bench_group(abelian({3, 3}));
  bench_group(abelian({4, 4}));
  bench_group(dihedral(8));
  bench_group(example_G(2));
  bench_group(abelian({2, 2, 2, 2, 2}));
  bench_group(example_G(3));
  bench_group(abelian({3, 3, 3, 3}));
  set_parallel_kernels(true);
  return 0;
}
