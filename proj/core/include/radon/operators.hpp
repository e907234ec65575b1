#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radon/kernels.hpp"
#include "radon/lattice_function.hpp"
#include "radon/polynomial.hpp"

namespace radon {

enum class OperatorKind { average, truncated, dyadicSum };

std::string operator_kind_name(OperatorKind kind);
OperatorKind parse_operator_kind(const std::string& name);  // avg | trunc | dyadic

struct OperatorResult {
  LatticeFunction g;
  OperatorKind kind = OperatorKind::average;
  std::int64_t N = 1;
};

// M_N f(x) = N^{-k} sum_{y in {1..N}^k} f(x - P(y)); per-point sums run in
// lexicographic y order, so results are bit-identical for any thread count
OperatorResult apply_average(const LatticeFunction& f, const PolynomialMapping& P,
                             std::int64_t N);

// T_N f(x) = sum_{y in {-N..N}^k \ {0}} f(x - P(y)) K(y)
OperatorResult apply_truncated(const LatticeFunction& f, const PolynomialMapping& P,
                               const CZKernel& K, std::int64_t N);

// sum_{j<=n} sum_y f(x - P(y)) K_j(y)
OperatorResult apply_dyadic_singular_sum(const LatticeFunction& f, const PolynomialMapping& P,
                                         const std::vector<DyadicKernelPiece>& pieces, int n);

// pointwise sup over the grid of |operator at N|; for dyadicSum the grid values
// must be powers of two and select partial sums n = log2(N)
LatticeFunction maximal(const LatticeFunction& f, const PolynomialMapping& P, OperatorKind kind,
                        const std::vector<std::int64_t>& grid, const CZKernel* K = nullptr,
                        const std::vector<DyadicKernelPiece>* pieces = nullptr);

std::vector<std::int64_t> dyadic_grid(int nmax);  // {1, 2, 4, ..., 2^nmax}
std::vector<std::int64_t> parse_grid(const std::string& spec);  // "dyadic:<nmax>" or "a,b,c"

struct NormRatioReport {
  double ratio = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  std::vector<std::pair<std::int64_t, double>> perN;  // single-N square-function norms
};

NormRatioReport norm_ratio_experiment(const FunctionFamily& family, const PolynomialMapping& P,
                                      OperatorKind kind, double p,
                                      const std::vector<std::int64_t>& grid,
                                      const CZKernel* K = nullptr,
                                      const std::vector<DyadicKernelPiece>* pieces = nullptr);

}  // namespace radon
