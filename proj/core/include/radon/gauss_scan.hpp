#pragma once

#include <cstdint>
#include <vector>

namespace radon {

struct GaussScanRow {
  std::int64_t q = 1;
  double maxAbsG = 0.0;
  double bound = 1.0;  // q^{-1/d + slack}
  double ratio = 0.0;
};

// max_{a in A_m} |G(a/m)| for the pure power mapping k=1, Gamma={(1),...,(d)},
// m a prime power.  The top coefficient only runs over orbit representatives
// of the unit action a_d -> u^d a_d (the substitution y -> u y fixes |G|),
// middle coefficients are scanned fully, and the linear coefficient is
// resolved by a length-m DFT.
double gauss_max_prime_power(int d, std::int64_t m);

// rows for q = 1..qmax; the per-q maximum is composed from prime powers by
// CRT multiplicativity of G
std::vector<GaussScanRow> gauss_max_scan(int d, std::int64_t qmax, double slack = 0.05);

}  // namespace radon
