#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace radon {

using BigInt = boost::multiprecision::cpp_int;
using MultiIndex = std::vector<int>;

// Gamma = { gamma in N_0^k \ {0} : 0 <= gamma_j <= N0 }, lexicographic order.
// d = |Gamma| = (N0+1)^k - 1.
struct MultiIndexSet {
  int k = 1;
  int N0 = 1;
  std::vector<MultiIndex> gammas;

  int dim() const { return static_cast<int>(gammas.size()); }
  // |gamma| per entry: the diagonal of the degree matrix A, (Av)_gamma = |gamma| v_gamma
  std::vector<int> orders() const;
};

MultiIndexSet build_gamma(int k, int N0);

// Q(y) = (y^gamma : gamma in Gamma), exact integer arithmetic
std::vector<BigInt> canonical_eval_big(const MultiIndexSet& g, const std::vector<std::int64_t>& y);

// int64 view of Q(y); computed exactly, throws std::overflow_error if a
// component leaves the int64 range (callers needing larger values use the big
// variant)
std::vector<std::int64_t> canonical_eval(const MultiIndexSet& g, const std::vector<std::int64_t>& y);

// t^A x = (t^{|gamma|} x_gamma : gamma)
std::vector<double> dilate(double t, const std::vector<int>& orders, const std::vector<double>& x);

}  // namespace radon
