#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "radon/expsums.hpp"
#include "radon/multiindex.hpp"

namespace radon {

struct DenominatorSet {
  std::int64_t N = 1;
  double rho = 1.0;
  std::int64_t N0 = 1;  // floor(N^{rho/2}) + 1
  int D = 1;            // floor(2/rho) + 1
  BigInt Q0;            // (N0!)^D
  std::vector<std::int64_t> primesWindow;  // primes in (N0, N]

  bool contains(const BigInt& q) const;
  // all members in increasing order; throws if the count exceeds maxCount
  std::vector<BigInt> all_members(std::size_t maxCount = 2000000) const;

  struct Factorization {
    BigInt Q;  // divides Q0
    BigInt w;  // in Pi(primesWindow) or 1
  };
};

// desk-scale guard: N0 <= 60
DenominatorSet build_denominator_set(std::int64_t N, double rho);

DenominatorSet::Factorization unique_factorization(const BigInt& q, const DenominatorSet& S);

struct RationalSet {
  int d = 1;
  std::vector<RationalPoint> points;
};

// all a/q with a in A_q, q in denoms
RationalSet build_rational_set(const std::vector<std::int64_t>& denoms,
                               const MultiIndexSet& gamma);

struct PartitionFamily {
  std::int64_t N = 1;
  int k = 1;
  std::int64_t rBound = 1;  // ceil((k^{k+1}/k!) ln(eN/k)) + 1
  std::vector<std::vector<int>> partitions;  // labels in [0, k) per element of {1..N}
};

// seeded surjections, re-sampled until the covering property verifies
// exhaustively (requires C(N, k) <= 1e6)
PartitionFamily partition_family(std::int64_t N, int k, std::uint64_t seed);

struct OPropertyFamily {
  int k = 0;
  std::vector<int> exponents;                           // gamma_j per slot
  std::vector<std::vector<std::int64_t>> slotPrimes;    // primes of S_j
  std::vector<std::int64_t> lambda;
};

struct OPropertyCheck {
  bool ok = false;
  OPropertyFamily family;    // certificate when ok
  std::string refutation;    // reason when not
};

OPropertyCheck o_property_check(const std::vector<std::int64_t>& lambda, int D);

struct ODecomposition {
  std::vector<std::vector<std::int64_t>> lambdas;
  std::vector<std::string> labels;  // "k=..;gamma=..;member=.." per emitted set
  std::int64_t familyBound = 0;     // D * D^D * max_k r(|V|, k)
};

// cover Pi(V) (products of <= D distinct primes of V at exponents 1..D) by
// sets with the O property, via partition families of V
ODecomposition decompose_o_property(const std::vector<std::int64_t>& primes, int D,
                                    std::int64_t N, std::uint64_t seed);

using BumpFn = std::function<double(double)>;  // radius -> value

// Xi(xi) = sum over the rational set of eta(E^{-1}(xi - a/q)), E = diag(eps);
// eta(x) = plateau 1 for |x| <= 1/(16 d), 0 for |x| >= 1/(8 d)
double projection_multiplier(const TorusPoint& xi, const RationalSet& rationals,
                             const std::vector<double>& epsilons, const BumpFn& bump = {},
                             bool* overlap = nullptr);

// per-coordinate torus separation implies pairwise disjoint bump supports
bool projection_supports_disjoint(const RationalSet& rationals,
                                  const std::vector<double>& epsilons);

}  // namespace radon
