#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "radon/geometry.hpp"
#include "radon/kernels.hpp"
#include "radon/multiindex.hpp"
#include "radon/numeric.hpp"

namespace radon {

struct TorusPoint {
  std::vector<double> x;  // each reduced to [-1/2, 1/2) on construction

  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> raw);
  static TorusPoint zero(int d) { return TorusPoint(std::vector<double>(d, 0.0)); }
  int dim() const { return static_cast<int>(x.size()); }
};

struct RationalPoint {
  std::vector<std::int64_t> a;  // 1 <= a_g <= q
  std::int64_t q = 1;

  RationalPoint() = default;
  RationalPoint(std::vector<std::int64_t> numerators, std::int64_t denominator);
  int dim() const { return static_cast<int>(a.size()); }
  bool in_Aq() const;           // gcd(q, gcd_g a_g) == 1
  TorusPoint torus() const;
};

// P(x; xi) = sum over 0 < |gamma| <= degree of xi_gamma x^gamma
struct WeylPhase {
  int k = 1;
  int degree = 1;
  std::vector<MultiIndex> gammas;  // total degree 1..degree, lex order
  std::vector<double> xi;
  // optional exact representation xi_g = num_g / den for rational phases
  bool rational = false;
  std::vector<std::int64_t> num;
  std::int64_t den = 1;

  static WeylPhase zero(int k, int degree);
  int index_of(const MultiIndex& g) const;
  void set(const MultiIndex& g, double value);
  void set_rational(const MultiIndex& g, std::int64_t numerator, std::int64_t denominator);
  double phase_mod1(const Point& n) const;  // in [0, 1), extended-precision or exact
};

using WeightFn = std::function<double(const std::vector<double>&)>;

// S_N = sum over region's lattice points of exp(2 pi i P(n)) * weight(n)
cplx weyl_sum(const WeylPhase& phase, const ConvexBody& region, const WeightFn& weight = {});

// G(a/q) = q^{-k} sum_{y in {1..q}^k} exp(2 pi i <a/q, Q(y)>), exact phases mod q
cplx gauss_sum(const RationalPoint& a, const MultiIndexSet& gamma);

// m_N(xi) = N^{-k} sum_{y in {1..N}^k} exp(2 pi i <xi, Q(y)>)
cplx multiplier_m(const TorusPoint& xi, std::int64_t N, const MultiIndexSet& gamma);
// m_j(xi) = sum_y K_j(y) exp(2 pi i <xi, Q(y)>)
cplx multiplier_m_piece(const TorusPoint& xi, const DyadicKernelPiece& piece,
                        const MultiIndexSet& gamma);

// Phi_N(xi) = int_{[0,1]^k} exp(2 pi i <xi, Q(Ny)>) dy, |error| <= 1e-8
cplx phi(const std::vector<double>& xi, std::int64_t N, const MultiIndexSet& gamma);
inline cplx phi(const TorusPoint& xi, std::int64_t N, const MultiIndexSet& gamma) {
  return phi(xi.x, N, gamma);
}
// Phi_j(xi) = int K_j(y) exp(2 pi i <xi, Q(y)>) dy over the piece's annulus
cplx phi_piece(const std::vector<double>& xi, const DyadicKernelPiece& piece,
               const MultiIndexSet& gamma);
// Psi_n = sum_{j=0}^n Phi_j
cplx psi_n(const std::vector<double>& xi, const std::vector<DyadicKernelPiece>& pieces, int n,
           const MultiIndexSet& gamma);

struct ApproxErrorResult {
  double error = 0.0;  // |m_N(xi) - G(a/q) Phi_N(xi - a/q)|
  double bound = 0.0;  // L2 * L3 / N (shape only, no constant asserted)
};

ApproxErrorResult approx_error(const RationalPoint& a, const TorusPoint& xi, std::int64_t N,
                               const MultiIndexSet& gamma, double L1, double L2, double L3);

// best rational a/q with q <= bound, gcd(a,q)=1, |theta - a/q| <= 1/(q*bound)
std::pair<std::int64_t, std::int64_t> dirichlet(double theta, std::int64_t bound);

struct RescaleResult {
  std::int64_t aPrime = 0;
  std::int64_t qPrime = 1;
  int certificateFlag = 0;  // 1: reduced Q*a/q works; 2: fresh Dirichlet approximation
};

// Given |theta - a/q| <= q^{-2} with q inside the (log N)-window for exponent j,
// produce a'/q' approximating Q*theta inside the beta2 window.
RescaleResult rescale_rational(double theta, std::int64_t a, std::int64_t q, std::int64_t Q,
                               std::int64_t N, int j, double beta, double betaPrime,
                               double beta2);

struct PhaseChoice {
  double xiGamma0 = 0.0;
  std::int64_t a = 0;  // rational approximation of xiGamma0
  std::int64_t q = 1;
  bool exactRational = false;  // xiGamma0 == a/q exactly: use the exact phase path
};

using PhaseBuilder = std::function<PhaseChoice(std::int64_t)>;

struct WeylDecayRow {
  std::int64_t N = 0;
  std::int64_t q = 1;
  double snAbs = 0.0;
  double bound = 0.0;   // N^k (log N)^{-alpha}
  bool windowOk = false;  // q inside [(log N)^beta, N^{|gamma0|} (log N)^{-beta}]
};

struct WeylDecayResult {
  std::vector<WeylDecayRow> rows;
  double betaRequired = 0.0;  // (alpha+2)(2 d^2 - 2 d + 1), d = |gamma0|
};

WeylDecayResult weyl_log_decay_experiment(const MultiIndex& gamma0, double alpha,
                                          const std::vector<std::int64_t>& Ngrid,
                                          const PhaseBuilder& builder);

enum class DecayKind { phiN, phiPiece, phiNminus1 };

// max over the grid of |Phi| / shape, where shape is min{1, t^{-1/d}} for phiN,
// min{1, t} for phiNminus1, min{t, t^{-1/d}} for phiPiece, t = |scale^A xi|_inf;
// degenerate shape-0 points are excluded
double decay_check(DecayKind kind, const std::vector<std::vector<double>>& grid,
                   std::int64_t NorJ, const MultiIndexSet& gamma,
                   const DyadicKernelPiece* piece = nullptr);

}  // namespace radon
