#pragma once

#include <vector>

#include "bghc/basis.hpp"

namespace bghc {

struct UniformSpec {
  int r = 0;  // rank
  int n = 0;  // ground size, n > r >= 1

  static UniformSpec make(int r, int n);
};

// All r-subsets of {0..n-1}, lexicographic.
BasisFamily uniform_bases(const UniformSpec& spec);

// Table-driven templates, for each f_i in B1-{e} and w outside B1+g:
//   A: B4 = B1-f_i+w, B3 = B2-f_i+w
//   B: B4 = B1-f_i+g, B3 = B2-f_i+w
//   C: B4 = B1-f_i+w, B3 = B2-g+w
// Yields 3(n-r-1)(r-1) distinct validated good cycles.
std::vector<GoodCycle> good_cycles_uniform(const UniformSpec& spec, const BasisFamily& family,
                                           const BasisGraph& bg, int b1, int b2);

}  // namespace bghc
