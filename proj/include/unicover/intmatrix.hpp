#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "unicover/modmatrix.hpp"

namespace unicov {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

// basis (as rows) of {x : a x^T = 0} over the integers
BigMatrix integer_kernel(const BigMatrix& a);

// row Hermite form of a, pivots left to right, pivot entries positive,
// entries above pivots reduced into [0, pivot)
BigMatrix hermite_form(BigMatrix a);

struct SmithResult {
  std::vector<BigInt> diag;  // nonnegative, ascending divisibility
  BigMatrix u, v;            // u a v = diag embedded in the original shape
};
SmithResult smith_form(BigMatrix a);

BigInt bareiss_det(BigMatrix a);

BigInt lattice_point_count(const Lattice& l);

}  // namespace unicov
