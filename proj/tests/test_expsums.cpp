#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "radon/expsums.hpp"
#include "radon/geometry.hpp"
#include "radon/kernels.hpp"
#include "radon/rng.hpp"

using namespace radon;

namespace {

double geometric_abs(std::int64_t N, double theta) {
  double s = std::sin(kPi * theta);
  if (std::abs(s) < 1e-15) return static_cast<double>(N);
  return std::abs(std::sin(kPi * static_cast<double>(N) * theta) / s);
}

}  // namespace

TEST_SUITE("expsums") {

TEST_CASE("linear Weyl sums match the geometric series") {
  for (double theta : {0.1, 0.37, 0.5, 0.923}) {
    for (std::int64_t N : {5, 32, 301}) {
      WeylPhase ph = WeylPhase::zero(1, 1);
      ph.set({1}, theta);
      cplx S = weyl_sum(ph, ConvexBody::window(1, N));
      CHECK(std::abs(S) == doctest::Approx(geometric_abs(N, theta)).epsilon(1e-9));
    }
  }
}

TEST_CASE("rational phases use exact arithmetic") {
  WeylPhase ph = WeylPhase::zero(1, 1);
  ph.set_rational({1}, 1, 3);
  // full periods cancel exactly
  cplx S = weyl_sum(ph, ConvexBody::window(1, 3 * 1000));
  CHECK(std::abs(S) < 1e-10);
}

TEST_CASE("weyl sum conjugation symmetry") {
  CounterRng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    WeylPhase a = WeylPhase::zero(1, 2), b = WeylPhase::zero(1, 2);
    double x1 = rng.next_real(), x2 = rng.next_real();
    a.set({1}, x1);
    a.set({2}, x2);
    b.set({1}, -x1);
    b.set({2}, -x2);
    cplx Sa = weyl_sum(a, ConvexBody::window(1, 200));
    cplx Sb = weyl_sum(b, ConvexBody::window(1, 200));
    CHECK(std::abs(Sb - std::conj(Sa)) < 1e-12 * 200);
  }
}

TEST_CASE("weights multiply pointwise") {
  WeylPhase ph = WeylPhase::zero(1, 1);
  ph.set({1}, 0.25);
  cplx unweighted = weyl_sum(ph, ConvexBody::window(1, 10));
  cplx weighted = weyl_sum(ph, ConvexBody::window(1, 10),
                           [](const std::vector<double>&) { return 1.0; });
  CHECK(std::abs(unweighted - weighted) < 1e-12);
}

TEST_CASE("gauss sum closed values") {
  MultiIndexSet g1 = build_gamma(1, 1);
  CHECK(std::abs(gauss_sum(RationalPoint({1}, 1), g1) - cplx(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(gauss_sum(RationalPoint({1}, 3), g1)) < 1e-14);

  MultiIndexSet g2 = build_gamma(1, 2);
  for (std::int64_t j = 1; j <= 4; ++j) {
    double m = std::abs(gauss_sum(RationalPoint({5, j}, 5), g2));
    CHECK(m == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-10));
  }
  // q = 2 saturates the trivial bound: y + y^2 is always even
  CHECK(std::abs(gauss_sum(RationalPoint({1, 1}, 2), g2) - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("gauss sums match a direct double loop") {
  CounterRng rng(42);
  MultiIndexSet g = build_gamma(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::int64_t q = rng.next_int(2, 25);
    std::vector<std::int64_t> a(3);
    do {
      for (auto& v : a) v = rng.next_int(1, q);
    } while (!RationalPoint(a, q).in_Aq());
    cplx direct(0, 0);
    for (std::int64_t y = 1; y <= q; ++y)
      direct += unit_phase(static_cast<double>((a[0] * (y % q) + a[1] * (y * y % q) +
                                                a[2] * (y * y * y % q)) %
                                               q) /
                           static_cast<double>(q));
    direct /= static_cast<double>(q);
    CHECK(std::abs(gauss_sum(RationalPoint(a, q), g) - direct) < 1e-12);
  }
}

TEST_CASE("gauss sums reject numerators sharing a factor with q") {
  MultiIndexSet g = build_gamma(1, 2);
  CHECK_THROWS_AS(gauss_sum(RationalPoint({2, 4}, 6), g), std::invalid_argument);
}

TEST_CASE("multiplier basics") {
  MultiIndexSet g = build_gamma(1, 2);
  CHECK(std::abs(multiplier_m(TorusPoint::zero(2), 7, g) - cplx(1.0, 0.0)) < 1e-14);
  CounterRng rng(43);
  for (int i = 0; i < 10; ++i) {
    TorusPoint xi({rng.next_real() - 0.5, rng.next_real() - 0.5});
    cplx m = multiplier_m(xi, 9, g);
    CHECK(std::abs(m) <= 1.0 + 1e-12);
    TorusPoint neg({-xi.x[0], -xi.x[1]});
    CHECK(std::abs(multiplier_m(neg, 9, g) - std::conj(m)) < 1e-12);
  }
  // integer shifts are erased by the torus reduction
  TorusPoint shifted({0.3 + 1.0, 0.1 - 2.0});
  TorusPoint plain({0.3, 0.1});
  CHECK(std::abs(multiplier_m(shifted, 9, g) - multiplier_m(plain, 9, g)) < 1e-12);
}

TEST_CASE("piece multiplier at zero is the discrete kernel sum") {
  MultiIndexSet g = build_gamma(1, 2);
  CZKernel K = make_builtin_kernel("hilbert", 1);
  auto pieces = dyadic_decompose_kernel(K, 4);
  for (const auto& piece : pieces) {
    cplx direct(0, 0);
    for (std::int64_t y = -16; y <= 16; ++y) {
      if (y == 0) continue;
      direct += piece.eval({static_cast<double>(y)});
    }
    CHECK(std::abs(multiplier_m_piece(TorusPoint::zero(2), piece, g) - direct) < 1e-12);
  }
}

TEST_CASE("phi reduces to the sinc kernel for linear phases") {
  MultiIndexSet g = build_gamma(1, 1);
  CHECK(std::abs(phi(std::vector<double>{0.0}, 5, g) - cplx(1.0, 0.0)) < 1e-8);
  for (double xi : {0.05, 0.21, 0.4}) {
    for (std::int64_t N : {2, 8, 32}) {
      double t = kPi * static_cast<double>(N) * xi;
      double expect = std::abs(std::sin(t) / t);
      CHECK(std::abs(phi(std::vector<double>{xi}, N, g)) ==
            doctest::Approx(expect).epsilon(1e-6));
    }
  }
}

TEST_CASE("phi depends only on scaled coordinates") {
  MultiIndexSet g = build_gamma(1, 2);
  cplx base = phi(std::vector<double>{0.31, 0.17}, 1, g);
  for (std::int64_t N : {2, 5, 9}) {
    double Nd = static_cast<double>(N);
    cplx scaled = phi(std::vector<double>{0.31 / Nd, 0.17 / (Nd * Nd)}, N, g);
    CHECK(std::abs(scaled - base) < 1e-7);
  }
}

TEST_CASE("phi agrees with a quasi Monte Carlo estimate") {
  MultiIndexSet g = build_gamma(1, 2);
  std::vector<double> xi{0.23, -0.11};
  std::int64_t N = 3;
  // Kronecker sequence with the golden ratio
  const double alpha = 0.6180339887498949;
  KahanSumC acc;
  const int n = 1000000;
  for (int i = 1; i <= n; ++i) {
    double y = frac1(alpha * i);
    double Ny = static_cast<double>(N) * y;
    acc.add(unit_phase(xi[0] * Ny + xi[1] * Ny * Ny));
  }
  cplx qmc = acc.value() / static_cast<double>(n);
  CHECK(std::abs(phi(xi, N, g) - qmc) < 2e-4);
}

TEST_CASE("phi piece vanishes at zero for mean-zero pieces") {
  MultiIndexSet g = build_gamma(1, 2);
  CZKernel K = make_builtin_kernel("hilbert", 1);
  auto pieces = dyadic_decompose_kernel(K, 4);
  for (std::size_t j = 1; j < pieces.size(); ++j)
    CHECK(std::abs(phi_piece(std::vector<double>{0.0, 0.0}, pieces[j], g)) < 1e-7);
  // psi_n is the cumulative sum of the pieces
  std::vector<double> xi{0.02, 0.005};
  cplx total(0, 0);
  for (int n = 0; n <= 4; ++n) {
    total += phi_piece(xi, pieces[static_cast<std::size_t>(n)], g);
    CHECK(std::abs(psi_n(xi, pieces, n, g) - total) < 1e-9);
  }
}

TEST_CASE("approximation error vanishes at the trivial major arc") {
  MultiIndexSet g = build_gamma(1, 1);
  RationalPoint a({1}, 1);
  ApproxErrorResult r = approx_error(a, TorusPoint::zero(1), 16, g, 16.0, 1.0, 1.0);
  CHECK(r.error < 1e-7);
  CHECK(r.bound == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("approximation error scales like 1/N on the q=2 ladder") {
  MultiIndexSet g = build_gamma(1, 1);
  RationalPoint a({1}, 2);
  double lo = 1e300, hi = 0.0;
  for (std::int64_t N : {16, 32, 64, 128}) {
    TorusPoint xi({0.5 + 0.25 / static_cast<double>(N)});
    ApproxErrorResult r = approx_error(a, xi, N, g, static_cast<double>(N), 1.0, 2.0);
    double scaled = r.error * static_cast<double>(N);
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(lo > 0.1);
  CHECK(hi < 3.0);
  CHECK(hi <= 2.0 * lo);
}

TEST_CASE("approximation error validates its window") {
  MultiIndexSet g = build_gamma(1, 1);
  RationalPoint a({1}, 2);
  // q > L3
  CHECK_THROWS_AS(approx_error(a, TorusPoint({0.5}), 16, g, 16.0, 1.0, 1.0),
                  std::invalid_argument);
  // |xi - a/q| too far for L1, L2
  CHECK_THROWS_AS(approx_error(a, TorusPoint({0.4}), 64, g, 64.0, 1.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("dirichlet pinned examples") {
  CHECK(dirichlet(0.5, 10) == std::pair<std::int64_t, std::int64_t>{1, 2});
  CHECK(dirichlet(0.0, 7) == std::pair<std::int64_t, std::int64_t>{0, 1});
  auto [a, q] = dirichlet(0.1415926, 100);
  CHECK(a == 1);
  CHECK(q == 7);
}

TEST_CASE("dirichlet output satisfies its inequality") {
  CounterRng rng(44);
  for (int trial = 0; trial < 10000; ++trial) {
    double theta = 4.0 * rng.next_real() - 2.0;
    std::int64_t bound = rng.next_int(1, 3000);
    auto [a, q] = dirichlet(theta, bound);
    CHECK(q >= 1);
    CHECK(q <= bound);
    CHECK(std::gcd(std::abs(a), q) == 1);
    CHECK(std::abs(theta - static_cast<double>(a) / static_cast<double>(q)) <=
          1.0 / (static_cast<double>(q) * static_cast<double>(bound)) + 1e-15);
  }
}

TEST_CASE("rescale keeps exact rationals in place") {
  const std::int64_t N = 1 << 20;
  SUBCASE("Q = 1 is the identity") {
    RescaleResult r = rescale_rational(1.0 / 1009.0, 1, 1009, 1, N, 1, 2.0, 0.5, 1.0);
    CHECK(r.aPrime == 1);
    CHECK(r.qPrime == 1009);
    CHECK(r.certificateFlag == 1);
  }
  SUBCASE("coprime Q rescales the numerator") {
    RescaleResult r = rescale_rational(1.0 / 1009.0, 1, 1009, 3, N, 1, 2.0, 0.5, 1.0);
    CHECK(r.aPrime == 3);
    CHECK(r.qPrime == 1009);
    CHECK(r.certificateFlag == 1);
  }
}

TEST_CASE("rescale falls back to a fresh approximation when needed") {
  const std::int64_t N = 1 << 20;
  const double L = std::log(static_cast<double>(N));
  double theta = 1.0 / 299.0 + 1.0 / 89500.0;
  RescaleResult r = rescale_rational(theta, 1, 299, 3, N, 1, 2.0, 0.5, 1.0);
  CHECK(r.certificateFlag == 2);
  double lb2 = std::pow(L, 1.0);
  CHECK(lb2 <= static_cast<double>(r.qPrime) * (1.0 + 1e-9));
  CHECK(static_cast<double>(r.qPrime) <=
        static_cast<double>(N) / lb2 * (1.0 + 1e-9));
  double err = std::abs(3.0 * theta -
                        static_cast<double>(r.aPrime) / static_cast<double>(r.qPrime));
  CHECK(err <= lb2 / (static_cast<double>(r.qPrime) * static_cast<double>(N)) * (1.0 + 1e-6));
}

TEST_CASE("weyl decay rows carry the window flag") {
  std::vector<std::int64_t> grid{1 << 10, 1 << 12};
  PhaseBuilder builder = [](std::int64_t) {
    return PhaseChoice{0.25, 1, 4, true};
  };
  WeylDecayResult res = weyl_log_decay_experiment({2}, 0.0, grid, builder);
  REQUIRE(res.rows.size() == 2);
  for (const auto& row : res.rows) {
    CHECK(row.q == 4);
    CHECK(row.bound == doctest::Approx(static_cast<double>(row.N)));
    CHECK_FALSE(row.windowOk);  // q = 4 sits far below (log N)^beta at these N
  }
  CHECK(res.betaRequired == doctest::Approx(10.0));
}

TEST_CASE("zero phase gives the full window sum") {
  WeylPhase ph = WeylPhase::zero(1, 2);
  cplx S = weyl_sum(ph, ConvexBody::window(1, 500));
  CHECK(S.real() == doctest::Approx(500.0));
  CHECK(std::abs(S.imag()) < 1e-12);
}

TEST_CASE("linear-phase decay constant matches the sinc envelope") {
  MultiIndexSet g = build_gamma(1, 1);
  std::vector<std::vector<double>> grid;
  for (int i = 1; i <= 40; ++i) grid.push_back({0.5 * i / 40.0});
  double c = decay_check(DecayKind::phiN, grid, 8, g);
  // sup_t |sin(t)/t| * t over the sampled range, computed analytically below
  double expect = 0.0;
  for (const auto& xi : grid) {
    double t = kPi * 8.0 * xi[0];
    double shape = std::min(1.0, 1.0 / (8.0 * xi[0]));
    expect = std::max(expect, std::abs(std::sin(t) / t) / shape);
  }
  CHECK(c == doctest::Approx(expect).epsilon(1e-5));
}

}  // TEST_SUITE
