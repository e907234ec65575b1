#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>

namespace radon {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// fractional part in [0, 1)
inline double frac1(double x) {
  double f = x - std::floor(x);
  return f < 1.0 ? f : 0.0;
}

// torus representative in [-1/2, 1/2)
inline double torus_reduce(double x) { return x - std::floor(x + 0.5); }

// e^{2 pi i t}
inline cplx unit_phase(double t) {
  double th = kTwoPi * torus_reduce(t);
  return {std::cos(th), std::sin(th)};
}

// ---------------------------------------------------------------------------
// compensated summation

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanSumC {
  KahanSum re, im;
  void add(const cplx& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

// ---------------------------------------------------------------------------
// double-double scraps, just enough to reduce xi*m mod 1 without losing the
// fractional part to the magnitude of m

struct DD {
  double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_frac(DD a) {
  double fh = a.hi - std::floor(a.hi);  // exact for |hi| below 2^53
  DD r = two_sum(fh, a.lo);
  double d = std::floor(r.hi);
  return {r.hi - d, r.lo};
}

// frac(xi * m) for |m| up to 2^62, accurate to a few ulp
inline double mul_mod1(double xi, std::int64_t m) {
  bool neg = m < 0;
  std::uint64_t um = neg ? ~static_cast<std::uint64_t>(m) + 1 : static_cast<std::uint64_t>(m);
  // base 2^31 Horner with exact limb products
  constexpr double kBase = 2147483648.0;  // 2^31
  std::uint64_t limbs[3] = {um >> 62, (um >> 31) & 0x7fffffffull, um & 0x7fffffffull};
  DD r{0.0, 0.0};
  for (std::uint64_t limb : limbs) {
    DD scaled{r.hi * kBase, r.lo * kBase};
    DD term = two_prod(xi, static_cast<double>(limb));
    DD s = two_sum(scaled.hi, term.hi);
    s.lo += scaled.lo + term.lo;
    r = dd_frac(s);
  }
  double f = frac1(r.hi + r.lo);
  if (neg && f != 0.0) f = 1.0 - f;
  return f;
}

// ---------------------------------------------------------------------------
// modular helpers

inline std::int64_t mulmod_i64(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t powmod_i64(std::int64_t base, std::uint64_t e, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r = 1;
  base %= m;
  if (base < 0) base += m;
  while (e) {
    if (e & 1) r = mulmod_i64(r, base, m);
    base = mulmod_i64(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace radon
