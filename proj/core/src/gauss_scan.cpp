#include "radon/gauss_scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "radon/fft.hpp"
#include "radon/numeric.hpp"
#include "radon/parallel.hpp"

namespace radon {

namespace {

// Bluestein plan for repeated length-m forward DFTs (sign +1)
struct DftPlan {
  std::int64_t m = 0;
  std::size_t pad = 1;
  std::vector<cplx> chirp;  // e^{pi i y^2 / m} via y^2 mod 2m
  std::vector<cplx> bHat;   // FFT of the wrapped conjugate chirp

  explicit DftPlan(std::int64_t n) : m(n) {
    const std::size_t mm = static_cast<std::size_t>(m);
    while (pad < 2 * mm - 1) pad <<= 1;
    chirp.resize(mm);
    for (std::int64_t y = 0; y < m; ++y) {
      std::int64_t sq = mulmod_i64(y, y, 2 * m);
      chirp[static_cast<std::size_t>(y)] =
          unit_phase(static_cast<double>(sq) / static_cast<double>(2 * m));
    }
    std::vector<cplx> b(pad, cplx(0.0, 0.0));
    for (std::size_t y = 0; y < mm; ++y) {
      cplx c = std::conj(chirp[y]);
      b[y] = c;
      if (y) b[pad - y] = c;
    }
    fft_pow2(b, -1);
    bHat = std::move(b);
  }

  // out[a] = sum_y x[y] e^{+2 pi i a y / m}
  void run(const std::vector<cplx>& x, std::vector<cplx>& out) const {
    const std::size_t mm = static_cast<std::size_t>(m);
    std::vector<cplx> a(pad, cplx(0.0, 0.0));
    for (std::size_t y = 0; y < mm; ++y) a[y] = x[y] * chirp[y];
    fft_pow2(a, -1);
    for (std::size_t i = 0; i < pad; ++i) a[i] *= bHat[i];
    fft_pow2(a, +1);
    out.resize(mm);
    double inv = 1.0 / static_cast<double>(pad);
    for (std::size_t t = 0; t < mm; ++t) out[t] = chirp[t] * (a[t] * inv);
  }
};

std::vector<std::int64_t> orbit_reps_top(int d, std::int64_t m) {
  // orbits of {u^d : u unit mod m} acting on Z/m by multiplication
  std::vector<std::int64_t> H;
  for (std::int64_t u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) H.push_back(powmod_i64(u, d, m));
  std::sort(H.begin(), H.end());
  H.erase(std::unique(H.begin(), H.end()), H.end());
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> reps;
  for (std::int64_t v = 0; v < m; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    reps.push_back(v);
    for (std::int64_t h : H) seen[static_cast<std::size_t>(mulmod_i64(h, v, m))] = 1;
  }
  return reps;
}

}  // namespace

double gauss_max_prime_power(int d, std::int64_t m) {
  if (d < 1) throw std::invalid_argument("gauss_max_prime_power: d >= 1 required");
  if (m < 1) throw std::invalid_argument("gauss_max_prime_power: m >= 1 required");
  if (m == 1) return 1.0;
  if (d == 1) return 0.0;  // G(a/m) = 0 for every unit a

  std::int64_t p = m;  // smallest prime factor = the base of the prime power
  for (std::int64_t f = 2; f * f <= m; ++f)
    if (m % f == 0) {
      p = f;
      break;
    }

  const std::size_t mm = static_cast<std::size_t>(m);
  DftPlan plan(m);
  std::vector<std::int64_t> reps = orbit_reps_top(d, m);

  double best = 0.0;
  std::vector<cplx> v(mm), g;
  std::vector<std::int64_t> mids(static_cast<std::size_t>(std::max(0, d - 2)), 0);
  for (std::int64_t top : reps) {
    while (true) {
      bool midsAllDivisible = top % p == 0;
      for (std::int64_t a : mids) midsAllDivisible = midsAllDivisible && a % p == 0;
      for (std::int64_t y = 0; y < m; ++y) {
        std::int64_t num = mulmod_i64(top, powmod_i64(y, d, m), m);
        for (int g2 = 2; g2 <= d - 1; ++g2)
          num = (num + mulmod_i64(mids[static_cast<std::size_t>(g2 - 2)],
                                  powmod_i64(y, g2, m), m)) %
                m;
        v[static_cast<std::size_t>(y)] =
            unit_phase(static_cast<double>(num) / static_cast<double>(m));
      }
      plan.run(v, g);
      for (std::int64_t a1 = 0; a1 < m; ++a1) {
        if (midsAllDivisible && a1 % p == 0) continue;  // outside A_m
        best = std::max(best, std::abs(g[static_cast<std::size_t>(a1)]));
      }

      int c = d - 3;
      while (c >= 0 && mids[static_cast<std::size_t>(c)] == m - 1) {
        mids[static_cast<std::size_t>(c)] = 0;
        --c;
      }
      if (c < 0) break;
      ++mids[static_cast<std::size_t>(c)];
    }
  }
  return best / static_cast<double>(m);
}

std::vector<GaussScanRow> gauss_max_scan(int d, std::int64_t qmax, double slack) {
  if (d < 1 || qmax < 1) throw std::invalid_argument("gauss_max_scan: d >= 1, qmax >= 1 required");

  std::vector<std::int64_t> primePowers;
  for (std::int64_t p = 2; p <= qmax; ++p) {
    bool prime = true;
    for (std::int64_t f = 2; f * f <= p; ++f)
      if (p % f == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    for (std::int64_t pk = p; pk <= qmax; pk *= p) {
      primePowers.push_back(pk);
      if (pk > qmax / p) break;
    }
  }

  std::vector<double> ppMax(primePowers.size(), 0.0);
  block_reduce(
      primePowers.size(), std::size_t{1}, 0,
      [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) ppMax[i] = gauss_max_prime_power(d, primePowers[i]);
        return 0;
      },
      [](int a, int) { return a; });
  std::map<std::int64_t, double> byPrimePower;
  for (std::size_t i = 0; i < primePowers.size(); ++i) byPrimePower[primePowers[i]] = ppMax[i];

  std::vector<GaussScanRow> rows;
  rows.reserve(static_cast<std::size_t>(qmax));
  for (std::int64_t q = 1; q <= qmax; ++q) {
    double maxG = 1.0;
    std::int64_t rest = q;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      std::int64_t pk = 1;
      while (rest % p == 0) {
        rest /= p;
        pk *= p;
      }
      maxG *= byPrimePower.at(pk);
    }
    if (rest > 1) maxG *= byPrimePower.at(rest);
    GaussScanRow row;
    row.q = q;
    row.maxAbsG = maxG;
    row.bound = std::pow(static_cast<double>(q), -1.0 / static_cast<double>(d) + slack);
    row.ratio = maxG / row.bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace radon
