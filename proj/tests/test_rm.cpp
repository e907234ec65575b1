#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "radon/lattice_function.hpp"
#include "radon/rademacher_menshov.hpp"
#include "radon/rng.hpp"

using namespace radon;

TEST_SUITE("rademacher-menshov") {

TEST_CASE("dyadic decomposition is exhaustively valid for n <= 256") {
  for (std::int64_t n = 1; n <= 256; ++n) {
    for (std::int64_t m = 0; m < n; ++m) {
      auto pieces = dyadic_interval_decomposition(m, n, 8);
      std::int64_t cur = m;
      std::map<int, int> perScale;
      for (const auto& iv : pieces) {
        CHECK(iv.lo() == cur);
        CHECK(iv.hi() > iv.lo());
        CHECK((iv.lo() >> iv.i) == iv.j);  // aligned: lo is a multiple of 2^i
        cur = iv.hi();
        ++perScale[iv.i];
      }
      CHECK(cur == n);
      for (const auto& [scale, count] : perScale) {
        (void)scale;
        CHECK(count <= 2);
      }
    }
  }
}

TEST_CASE("decomposition examples") {
  auto whole = dyadic_interval_decomposition(0, 8, 3);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].i == 3);
  CHECK(whole[0].j == 0);

  auto split = dyadic_interval_decomposition(3, 7, 3);
  // [3,4) + [4,6) + [6,7)
  REQUIRE(split.size() == 3);
  CHECK(split[0].lo() == 3);
  CHECK(split[1].lo() == 4);
  CHECK(split[1].hi() == 6);
  CHECK(split[2].hi() == 7);
}

TEST_CASE("maximal inequality holds for random sequences") {
  CounterRng rng(606);
  for (int trial = 0; trial < 3000; ++trial) {
    int s = trial % 7;
    std::size_t len = (static_cast<std::size_t>(1) << s) + 1;
    std::vector<cplx> a(len);
    for (auto& v : a) v = rng.next_complex(2.0);
    std::size_t j0 = static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(len) - 1));
    CHECK(rm_check(a, j0));
  }
}

TEST_CASE("rhs is tight for a single jump") {
  // a = (0, 0, ..., 0, 1): the maximum equals one dyadic difference
  std::vector<cplx> a(9, cplx(0, 0));
  a[8] = cplx(1.0, 0.0);
  double rhs = rm_rhs(a, 0);
  CHECK(rhs >= 1.0);
  CHECK(rhs <= std::sqrt(2.0) * 4.0  + 1e-12);
}

TEST_CASE("constant sequences cost only the base term") {
  std::vector<cplx> a(17, cplx(0.5, -0.25));
  double rhs = rm_rhs(a, 3);
  CHECK(rhs == doctest::Approx(std::abs(a[0])));
}

TEST_CASE("function decomposition reassembles the final element") {
  CounterRng rng(607);
  std::vector<LatticeFunction> g;
  for (int i = 0; i < 5; ++i) {
    LatticeFunction f(1);
    for (int t = 0; t < 3; ++t) {
      Point p{rng.next_int(-3, 3)};
      f.set(p, rng.next_complex(1.0));
    }
    g.push_back(f);
  }
  RmFunctionDecomposition dec = rm_function_decomposition(g, 2);
  CHECK(dec.base == g[2]);
  CHECK(dec.squareFunctions.size() == 3);  // scales 0..2 for length 5 = 2^2 + 1
}

}  // TEST_SUITE
