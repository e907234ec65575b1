#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "radon/gauss_scan.hpp"
#include "radon/numeric.hpp"

using namespace radon;

namespace {

// direct enumeration of max_{a in A_q} |G(a/q)| for the pure power mapping
double brute_max(int d, std::int64_t q) {
  if (q == 1) return 1.0;
  std::vector<std::int64_t> a(static_cast<std::size_t>(d), 1);
  double best = 0.0;
  while (true) {
    std::int64_t g = q;
    for (auto v : a) g = std::gcd(g, v);
    if (g == 1) {
      KahanSumC acc;
      for (std::int64_t y = 1; y <= q; ++y) {
        std::int64_t phase = 0;
        std::int64_t pw = 1;
        for (int i = 0; i < d; ++i) {
          pw = mulmod_i64(pw, y % q, q);
          phase = (phase + mulmod_i64(a[static_cast<std::size_t>(i)], pw, q)) % q;
        }
        acc.add(unit_phase(static_cast<double>(phase) / static_cast<double>(q)));
      }
      best = std::max(best, std::abs(acc.value()) / static_cast<double>(q));
    }
    int i = d - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == q) {
      a[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return best;
}

}  // namespace

TEST_SUITE("gauss-scan") {

TEST_CASE("prime power maxima match brute force (d=2)") {
  for (std::int64_t m : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27}) {
    CHECK(gauss_max_prime_power(2, m) == doctest::Approx(brute_max(2, m)).epsilon(1e-9));
  }
}

TEST_CASE("prime power maxima match brute force (d=3)") {
  for (std::int64_t m : {2, 3, 4, 5, 7, 8, 9, 11}) {
    CHECK(gauss_max_prime_power(3, m) == doctest::Approx(brute_max(3, m)).epsilon(1e-9));
  }
}

TEST_CASE("linear case collapses to zero beyond q=1") {
  for (std::int64_t m : {2, 3, 9, 16}) CHECK(gauss_max_prime_power(1, m) == doctest::Approx(0.0));
}

TEST_CASE("scan rows compose composite q from prime powers (d=2)") {
  auto rows = gauss_max_scan(2, 40);
  REQUIRE(rows.size() == 40);
  for (const auto& row : rows) {
    CHECK(row.maxAbsG == doctest::Approx(brute_max(2, row.q)).epsilon(1e-8));
    CHECK(row.bound == doctest::Approx(std::pow(static_cast<double>(row.q), -0.5 + 0.05)));
    if (row.bound > 0) CHECK(row.ratio == doctest::Approx(row.maxAbsG / row.bound));
  }
}

TEST_CASE("scan rows compose composite q from prime powers (d=3)") {
  auto rows = gauss_max_scan(3, 12);
  for (const auto& row : rows)
    CHECK(row.maxAbsG == doctest::Approx(brute_max(3, row.q)).epsilon(1e-8));
}

TEST_CASE("known quadratic values") {
  auto rows = gauss_max_scan(2, 8);
  // odd prime p: classical modulus p^{-1/2}
  CHECK(rows[4].q == 5);
  CHECK(rows[4].maxAbsG == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-10));
  CHECK(rows[6].q == 7);
  CHECK(rows[6].maxAbsG == doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-10));
  // q = 2: the quadratic phase is constant on A_2, |G| = 1
  CHECK(rows[1].q == 2);
  CHECK(rows[1].maxAbsG == doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
