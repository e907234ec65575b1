#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "radon/numeric.hpp"

namespace radon {

struct QuadratureResult {
  cplx value{0.0, 0.0};
  double errorEstimate = 0.0;
  std::int64_t panels = 0;
  bool converged = false;
};

// Gauss–Legendre nodes/weights on [-1, 1]; cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

using BoxFn = std::function<cplx(const std::vector<double>&)>;
using PhaseFn = std::function<double(const std::vector<double>&)>;

// Adaptive tensor quadrature over an axis box, bisecting the panel with the
// largest embedded error estimate until the total is below tol.
QuadratureResult integrate_box(const BoxFn& f, const std::vector<double>& lo,
                               const std::vector<double>& hi, double tol,
                               std::int64_t maxPanels = (1 << 21));

// ∫ exp(i·phase(y)) dy over the box. Panels are pre-split until the sampled
// phase variation is below pi/4, then refined adaptively like integrate_box.
QuadratureResult integrate_oscillatory(const PhaseFn& phase, const std::vector<double>& lo,
                                       const std::vector<double>& hi, double tol,
                                       std::int64_t maxPanels = (1 << 21));

// ∫_{a <= |y| <= b} f(y) dy in dimension k ∈ {1,2,3}, via polar/spherical charts.
QuadratureResult annulus_integral(const BoxFn& f, int k, double a, double b, double tol,
                                  std::int64_t maxPanels = (1 << 21));

}  // namespace radon
