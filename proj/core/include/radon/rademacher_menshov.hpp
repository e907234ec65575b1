#pragma once

#include <cstdint>
#include <vector>

#include "radon/lattice_function.hpp"
#include "radon/numeric.hpp"

namespace radon {

struct DyadicInterval {
  int i = 0;           // scale
  std::int64_t j = 0;  // index: [j*2^i, (j+1)*2^i)
  std::int64_t lo() const { return j << i; }
  std::int64_t hi() const { return (j + 1) << i; }
};

// greedy decomposition of [m, n) into dyadic intervals, longest-first from the
// left; at most two intervals of each scale appear
std::vector<DyadicInterval> dyadic_interval_decomposition(std::int64_t m, std::int64_t n, int s);

// right side of the maximal inequality:
// |a_{j0}| + sqrt(2) * sum_i ( sum_j |a_{(j+1)2^i} - a_{j 2^i}|^2 )^{1/2}
double rm_rhs(const std::vector<cplx>& a, std::size_t j0);

// max_j |a_j| <= rm_rhs(a, j0) + 1e-12
bool rm_check(const std::vector<cplx>& a, std::size_t j0);

struct RmFunctionDecomposition {
  LatticeFunction base;                         // g_{j0}
  std::vector<LatticeFunction> squareFunctions;  // one per scale i = 0..s
};

RmFunctionDecomposition rm_function_decomposition(const std::vector<LatticeFunction>& g,
                                                  std::size_t j0);

}  // namespace radon
