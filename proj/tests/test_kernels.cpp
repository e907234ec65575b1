#include <doctest.h>

#include <cmath>
#include <vector>

#include "radon/kernels.hpp"

using namespace radon;

TEST_SUITE("kernels") {

TEST_CASE("builtin kernels evaluate to their closed forms") {
  CZKernel H = make_builtin_kernel("hilbert", 1);
  CHECK(H.eval({2.0}).real() == doctest::Approx(0.5));
  CHECK(H.eval({-4.0}).real() == doctest::Approx(-0.25));

  CZKernel R = make_builtin_kernel("riesz-2", 2);
  double r = std::hypot(3.0, 4.0);
  CHECK(R.eval({3.0, 4.0}).real() == doctest::Approx(4.0 / (r * r * r)));
  CHECK_THROWS_AS(make_builtin_kernel("riesz-3", 2), std::invalid_argument);
}

TEST_CASE("gradients match finite differences") {
  CZKernel H = make_builtin_kernel("hilbert", 1);
  auto g = kernel_gradient(H, {1.5});
  CHECK(g[0].real() == doctest::Approx(-1.0 / 2.25).epsilon(1e-6));
  CZKernel R = make_builtin_kernel("riesz-1", 2);
  auto g2 = kernel_gradient(R, {1.0, 2.0});
  // d/dx1 of x1/|x|^3 = (|x|^2 - 3 x1^2)/|x|^5
  double n = std::sqrt(5.0);
  CHECK(g2[0].real() == doctest::Approx((5.0 - 3.0) / std::pow(n, 5)).epsilon(1e-6));
}

TEST_CASE("size and cancellation checks pass for builtin kernels") {
  for (auto [name, k] : {std::pair<const char*, int>{"hilbert", 1}, {"riesz-1", 2}}) {
    CZKernel K = make_builtin_kernel(name, k);
    CzReport rep = cz_check(K, 64, {1.0, 2.0, 4.0, 8.0});
    CHECK(rep.pass());
  }
}

TEST_CASE("smooth step plateaus") {
  CHECK(smooth_step(0.5) == doctest::Approx(1.0));
  CHECK(smooth_step(1.0) == doctest::Approx(1.0));
  CHECK(smooth_step(2.0) == doctest::Approx(0.0));
  CHECK(smooth_step(3.0) == doctest::Approx(0.0));
  double a = smooth_step(1.2), b = smooth_step(1.7);
  CHECK(a > b);
  CHECK(a < 1.0);
  CHECK(b > 0.0);
}

TEST_CASE("dyadic bump support and partition of unity") {
  CHECK(dyadic_chi(0.5) == doctest::Approx(0.0));
  CHECK(dyadic_chi(2.0) == doctest::Approx(0.0));
  CHECK(dyadic_chi(1.0) > 0.0);
  for (double r : {1.0, 1.7, 3.0, 9.4, 100.0}) {
    double s = 0.0;
    for (int j = 0; j <= 12; ++j) s += dyadic_psi(j, r);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
  // psi_j vanishes outside (2^{j-2}, 2^j)
  CHECK(dyadic_psi(3, 2.0) == doctest::Approx(0.0));
  CHECK(dyadic_psi(3, 8.0) == doctest::Approx(0.0));
  CHECK(dyadic_psi(3, 4.0) > 0.0);
}

TEST_CASE("dyadic pieces of the Hilbert kernel reproduce K * psi_j") {
  CZKernel K = make_builtin_kernel("hilbert", 1);
  auto pieces = dyadic_decompose_kernel(K, 6);
  REQUIRE(pieces.size() == 7);
  for (const auto& piece : pieces) {
    CHECK(piece.meanZero == (piece.j >= 1));
    // the symmetric annulus integral of 1/y vanishes, so no correction is needed
    CHECK(std::abs(piece.correctionMass) < 1e-9);
  }
  for (double y : {1.0, 2.5, -3.0, 7.9, -12.0}) {
    double total = 0.0;
    for (const auto& piece : pieces) total += piece.eval({y}).real();
    CHECK(total == doctest::Approx(1.0 / y).epsilon(1e-10));
  }
}

TEST_CASE("dyadic pieces of a shifted kernel stay mean-zero") {
  // an even kernel has nonzero annular means, forcing a bump correction
  CZKernel K;
  K.k = 1;
  K.name = "even";
  K.eval = [](const std::vector<double>& y) { return cplx(1.0 / std::abs(y[0]), 0.0); };
  auto pieces = dyadic_decompose_kernel(K, 5);
  for (std::size_t j = 1; j < pieces.size(); ++j) {
    CHECK(pieces[j].meanZero);
    CHECK(std::abs(pieces[j].correctionMass) > 0.0);
    // quadrature of the corrected piece over its annulus
    const double lo = std::ldexp(1.0, static_cast<int>(j) - 2);
    const double hi = std::ldexp(1.0, static_cast<int>(j));
    const int n = 40000;
    double integral = 0.0;
    for (int half : {0, 1}) {
      double sgn = half == 0 ? 1.0 : -1.0;
      for (int i = 0; i < n; ++i) {
        double r = lo + (hi - lo) * (i + 0.5) / n;
        integral += pieces[j].eval({sgn * r}).real() * (hi - lo) / n;
      }
    }
    CHECK(std::abs(integral) < 1e-6);
  }
}

TEST_CASE("averaging kernel has unit mass and correct counts") {
  MultiIndexSet g = build_gamma(1, 2);
  AveragingKernel a = averaging_kernel(4, g);
  CHECK(a.total_mass() == doctest::Approx(1.0));
  // P(y) = (y, y^2) is injective on {1..4}: four support points with count 1
  CHECK(a.counts.size() == 4);
  for (const auto& [p, c] : a.counts) CHECK(c == 1);
  CHECK(a.a.at({2, 4}).real() == doctest::Approx(0.25));
}

}  // TEST_SUITE
