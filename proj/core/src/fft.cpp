#include "radon/fft.hpp"

#include <stdexcept>

namespace radon {

void fft_pow2(std::vector<cplx>& v, int sign) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const cplx wlen = unit_phase(static_cast<double>(sign) / static_cast<double>(len));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = v[i + j];
        const cplx t = v[i + j + len / 2] * w;
        v[i + j] = u + t;
        v[i + j + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
}

std::vector<cplx> dft(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if ((n & (n - 1)) == 0) {
    std::vector<cplx> v = x;
    fft_pow2(v, sign);
    return v;
  }
  // Bluestein: a*y = (a^2 + y^2 - (a-y)^2)/2, chirp c_t = exp(sign*pi*i*t^2/n)
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  const std::int64_t twoN = 2 * static_cast<std::int64_t>(n);
  auto chirp = [&](std::int64_t t) {
    const std::int64_t r = (t % twoN * (t % twoN)) % twoN;  // t^2 mod 2n, t < 2n
    return unit_phase(static_cast<double>(sign) * static_cast<double>(r) / (2.0 * n));
  };
  std::vector<cplx> a(m, cplx(0.0, 0.0)), b(m, cplx(0.0, 0.0));
  for (std::size_t y = 0; y < n; ++y) a[y] = x[y] * chirp(static_cast<std::int64_t>(y));
  for (std::size_t t = 0; t < n; ++t) {
    const cplx c = std::conj(chirp(static_cast<std::int64_t>(t)));
    b[t] = c;
    if (t != 0) b[m - t] = c;
  }
  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_pow2(a, +1);
  std::vector<cplx> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = a[t] * chirp(static_cast<std::int64_t>(t)) / static_cast<double>(m);
  return out;
}

}  // namespace radon
