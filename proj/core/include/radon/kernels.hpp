#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "radon/lattice_function.hpp"
#include "radon/multiindex.hpp"
#include "radon/numeric.hpp"

namespace radon {

using KernelFn = std::function<cplx(const std::vector<double>&)>;
using KernelGradFn = std::function<std::vector<cplx>(const std::vector<double>&)>;

struct CZKernel {
  int k = 1;
  KernelFn eval;
  KernelGradFn grad;  // empty => central finite differences
  double czConstant = 1.0;
  std::string name;
};

// "hilbert" (k=1, 1/y) or "riesz-<i>" (y_i/|y|^{k+1}); "riesz-i" means i=1
CZKernel make_builtin_kernel(const std::string& name, int k);

std::vector<cplx> kernel_gradient(const CZKernel& K, const std::vector<double>& y);

// smooth step: 1 for r <= 1, 0 for r >= 2, exp(-1/x) transition
double smooth_step(double r);
// dyadic partition bump chi(r) = s(r) - s(2r), support (1/2, 2)
double dyadic_chi(double r);
// psi_j(y) = chi(|y| / 2^{j-1}), support (2^{j-2}, 2^j); sum_j psi_j = 1 on |y| >= 1
double dyadic_psi(int j, double absY);

struct CzReport {
  double worstSizeRatio = 0.0;
  double worstSizeRadius = 0.0;
  double worstCancellation = 0.0;
  double worstCancellationLambda = 0.0;
  bool sizePass = false;
  bool cancelPass = false;
  bool pass() const { return sizePass && cancelPass; }
};

CzReport cz_check(const CZKernel& K, int radialSamples, const std::vector<double>& lambdaGrid);

struct DyadicKernelPiece {
  int j = 0;
  bool meanZero = false;
  double correctionMass = 0.0;  // coefficient removed by the bump for j >= 1
  KernelFn eval;
};

// K_j = K * psi_j, with a radial-bump mean correction for j >= 1; the
// correction vanishes for kernels with exact annular cancellation.
std::vector<DyadicKernelPiece> dyadic_decompose_kernel(const CZKernel& K, int jmax);

struct AveragingKernel {
  LatticeFunction a;                  // on Z^d, values count/N^k
  std::map<Point, std::int64_t> counts;
  std::int64_t N = 1;
  MultiIndexSet gamma;
  double total_mass() const;          // exact 1.0: integer count sum / N^k
};

AveragingKernel averaging_kernel(std::int64_t N, const MultiIndexSet& gamma);

}  // namespace radon
