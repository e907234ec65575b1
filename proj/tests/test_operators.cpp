#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "radon/kernels.hpp"
#include "radon/lattice_function.hpp"
#include "radon/operators.hpp"
#include "radon/polynomial.hpp"
#include "radon/rng.hpp"

using namespace radon;

namespace {

LatticeFunction random_function(CounterRng& rng, int dim, int points) {
  LatticeFunction f(dim);
  for (int i = 0; i < points; ++i) {
    Point p(static_cast<std::size_t>(dim));
    for (auto& c : p) c = rng.next_int(-6, 6);
    f.set(p, rng.next_complex(1.0));
  }
  return f;
}

double sup_diff(const LatticeFunction& a, const LatticeFunction& b) {
  double worst = 0.0;
  for (const auto& [p, v] : a.values()) worst = std::max(worst, std::abs(v - b.at(p)));
  for (const auto& [p, v] : b.values()) worst = std::max(worst, std::abs(v - a.at(p)));
  return worst;
}

// scatter-style double loop, the transpose of the library's gather
LatticeFunction brute_average(const LatticeFunction& f, const PolynomialMapping& P,
                              std::int64_t N) {
  std::map<Point, cplx> acc;
  std::vector<std::int64_t> y(static_cast<std::size_t>(P.k), 1);
  while (true) {
    auto Py = P.eval(y);
    for (const auto& [z, v] : f.values()) {
      Point x = z;
      for (int c = 0; c < P.d0; ++c) x[static_cast<std::size_t>(c)] += Py[static_cast<std::size_t>(c)];
      acc[x] += v;
    }
    int axis = P.k - 1;
    while (axis >= 0 && y[static_cast<std::size_t>(axis)] == N) {
      y[static_cast<std::size_t>(axis)] = 1;
      --axis;
    }
    if (axis < 0) break;
    ++y[static_cast<std::size_t>(axis)];
  }
  LatticeFunction g(P.d0);
  double scale = std::pow(static_cast<double>(N), -P.k);
  for (const auto& [p, v] : acc) g.set(p, v * scale);
  return g;
}

LatticeFunction brute_truncated(const LatticeFunction& f, const PolynomialMapping& P,
                                const CZKernel& K, std::int64_t N) {
  std::map<Point, cplx> acc;
  std::vector<std::int64_t> y(static_cast<std::size_t>(P.k), -N);
  while (true) {
    bool zero = true;
    for (auto c : y) zero = zero && c == 0;
    if (!zero) {
      std::vector<double> yd(y.begin(), y.end());
      cplx w = K.eval(yd);
      auto Py = P.eval(y);
      for (const auto& [z, v] : f.values()) {
        Point x = z;
        for (int c = 0; c < P.d0; ++c)
          x[static_cast<std::size_t>(c)] += Py[static_cast<std::size_t>(c)];
        acc[x] += v * w;
      }
    }
    int axis = P.k - 1;
    while (axis >= 0 && y[static_cast<std::size_t>(axis)] == N) {
      y[static_cast<std::size_t>(axis)] = -N;
      --axis;
    }
    if (axis < 0) break;
    ++y[static_cast<std::size_t>(axis)];
  }
  LatticeFunction g(P.d0);
  for (const auto& [p, v] : acc) g.set(p, v);
  return g;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("averages match the scatter oracle") {
  CounterRng rng(301);
  for (int trial = 0; trial < 25; ++trial) {
    int k = static_cast<int>(rng.next_int(1, 2));
    PolynomialMapping P = k == 1 ? PolynomialMapping::one_dim({{1}, {0, 1}})
                                 : PolynomialMapping::canonical(build_gamma(2, 1));
    std::int64_t N = rng.next_int(1, 8);
    LatticeFunction f = random_function(rng, P.d0, 5);
    CHECK(sup_diff(apply_average(f, P, N).g, brute_average(f, P, N)) < 1e-12);
  }
}

TEST_CASE("truncated transforms match the scatter oracle") {
  CounterRng rng(302);
  for (int trial = 0; trial < 15; ++trial) {
    int k = static_cast<int>(rng.next_int(1, 2));
    PolynomialMapping P = k == 1 ? PolynomialMapping::one_dim({{0, 1}})
                                 : PolynomialMapping::canonical(build_gamma(2, 1));
    CZKernel K = make_builtin_kernel(k == 1 ? "hilbert" : "riesz-1", k);
    std::int64_t N = rng.next_int(1, 6);
    LatticeFunction f = random_function(rng, P.d0, 5);
    CHECK(sup_diff(apply_truncated(f, P, K, N).g, brute_truncated(f, P, K, N)) < 1e-12);
  }
}

TEST_CASE("dyadic partial sums match a per-piece oracle") {
  PolynomialMapping P = PolynomialMapping::one_dim({{1}, {0, 1}});
  CZKernel K = make_builtin_kernel("hilbert", 1);
  auto pieces = dyadic_decompose_kernel(K, 3);
  CounterRng rng(303);
  LatticeFunction f = random_function(rng, 2, 4);
  OperatorResult res = apply_dyadic_singular_sum(f, P, pieces, 3);

  std::map<Point, cplx> acc;
  for (int n = 0; n <= 3; ++n) {
    for (std::int64_t y = -8; y <= 8; ++y) {
      if (y == 0) continue;
      cplx w = pieces[static_cast<std::size_t>(n)].eval({static_cast<double>(y)});
      if (std::abs(w) == 0.0) continue;
      auto Py = P.eval({y});
      for (const auto& [z, v] : f.values()) acc[{z[0] + Py[0], z[1] + Py[1]}] += v * w;
    }
  }
  LatticeFunction oracle(2);
  for (const auto& [p, v] : acc) oracle.set(p, v);
  CHECK(sup_diff(res.g, oracle) < 1e-12);
}

TEST_CASE("translation equivariance is bit-exact") {
  PolynomialMapping P = PolynomialMapping::one_dim({{1}, {0, 1}});
  CounterRng rng(304);
  LatticeFunction f = random_function(rng, 2, 6);
  Point z{3, -2};
  LatticeFunction lhs = apply_average(f.translated(z), P, 5).g;
  LatticeFunction rhs = apply_average(f, P, 5).g.translated(z);
  CHECK(lhs == rhs);
}

TEST_CASE("linearity holds to rounding") {
  PolynomialMapping P = PolynomialMapping::one_dim({{0, 1}});
  CounterRng rng(305);
  LatticeFunction f = random_function(rng, 1, 5);
  LatticeFunction g = random_function(rng, 1, 5);
  cplx alpha{0.7, -0.2};
  LatticeFunction combo = add(f.scaled(alpha), g);
  LatticeFunction lhs = apply_average(combo, P, 6).g;
  LatticeFunction rhs = add(apply_average(f, P, 6).g.scaled(alpha), apply_average(g, P, 6).g);
  CHECK(sup_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("maximal equals the explicit sup over the grid") {
  PolynomialMapping P = PolynomialMapping::one_dim({{1}, {0, 1}});
  CounterRng rng(306);
  LatticeFunction f = random_function(rng, 2, 5);
  std::vector<std::int64_t> grid{1, 2, 4, 8};
  LatticeFunction m = maximal(f, P, OperatorKind::average, grid);
  std::vector<LatticeFunction> each;
  for (auto N : grid) each.push_back(apply_average(f, P, N).g);
  LatticeFunction oracle = pointwise_sup_abs(each);
  CHECK(sup_diff(m, oracle) == 0.0);
  CHECK_THROWS_AS(maximal(f, P, OperatorKind::average, {4, 2}), std::invalid_argument);
}

TEST_CASE("single average of a delta is a shifted delta") {
  PolynomialMapping P = PolynomialMapping::one_dim({{1}, {0, 1}});
  LatticeFunction d = delta({0, 0});
  LatticeFunction g = apply_average(d, P, 1).g;
  CHECK(g.support_size() == 1);
  CHECK(g.at({1, 1}).real() == doctest::Approx(1.0));
}

TEST_CASE("norm ratio is exactly one on a trivial grid") {
  PolynomialMapping P = PolynomialMapping::one_dim({{1}, {0, 1}});
  FunctionFamily fam;
  fam.members.push_back(delta({0, 0}));
  NormRatioReport rep = norm_ratio_experiment(fam, P, OperatorKind::average, 2.0, {1});
  CHECK(rep.ratio == doctest::Approx(1.0));
  CHECK(rep.perN.size() == 1);
}

TEST_CASE("grid parsing") {
  CHECK(dyadic_grid(3) == std::vector<std::int64_t>{1, 2, 4, 8});
  CHECK(parse_grid("dyadic:2") == std::vector<std::int64_t>{1, 2, 4});
  CHECK(parse_grid("3,5,9") == std::vector<std::int64_t>{3, 5, 9});
  CHECK_THROWS_AS(parse_grid("dyadic:x"), std::invalid_argument);
}

}  // TEST_SUITE
