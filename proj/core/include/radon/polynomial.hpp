#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "radon/multiindex.hpp"

namespace radon {

// P = (P_1,...,P_{d0}): Z^k -> Z^{d0}, P_j(y) = sum_gamma c_j^gamma y^gamma,
// integer coefficients, no constant term (P(0) = 0 by construction).
struct PolynomialMapping {
  int k = 1;
  int d0 = 1;
  // terms[j]: the monomials of P_{j+1} as (gamma, coefficient) pairs
  std::vector<std::vector<std::pair<MultiIndex, std::int64_t>>> terms;

  static PolynomialMapping canonical(const MultiIndexSet& g);
  // convenience for k=1 moment-style mappings: coeffs[i] multiplies y^{i+1}
  static PolynomialMapping one_dim(const std::vector<std::vector<std::int64_t>>& powerCoeffs);

  int max_total_degree() const;
  void validate() const;

  std::vector<BigInt> eval_big(const std::vector<std::int64_t>& y) const;
  // overflow-checked int64 evaluation
  std::vector<std::int64_t> eval(const std::vector<std::int64_t>& y) const;
};

// the factorization P = L o Q of Lemma-style lifting: (Lv)_j = sum_gamma c_j^gamma v_gamma
struct Lifting {
  MultiIndexSet gamma;
  std::vector<std::vector<std::int64_t>> L;  // d0 rows, d columns
};

Lifting lift(const PolynomialMapping& P);

std::vector<BigInt> apply_linear(const std::vector<std::vector<std::int64_t>>& L,
                                 const std::vector<BigInt>& v);

}  // namespace radon
