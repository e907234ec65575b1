#include "radon/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "radon/parallel.hpp"
#include "radon/quadrature.hpp"

namespace radon {

TorusPoint::TorusPoint(std::vector<double> raw) : x(std::move(raw)) {
  for (double& v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("expsums: non-finite torus coordinate");
    v = torus_reduce(v);
  }
}

RationalPoint::RationalPoint(std::vector<std::int64_t> numerators, std::int64_t denominator)
    : a(std::move(numerators)), q(denominator) {
  if (q < 1) throw std::invalid_argument("expsums: denominator must be >= 1");
  for (std::int64_t v : a)
    if (v < 1 || v > q) throw std::invalid_argument("expsums: numerators must lie in [1, q]");
}

bool RationalPoint::in_Aq() const {
  std::int64_t g = 0;
  for (std::int64_t v : a) g = std::gcd(g, v);
  return std::gcd(q, g) == 1;
}

TorusPoint RationalPoint::torus() const {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    v[i] = static_cast<double>(a[i]) / static_cast<double>(q);
  return TorusPoint(std::move(v));
}

// ---------------------------------------------------------------------------
// WeylPhase

WeylPhase WeylPhase::zero(int k, int degree) {
  if (k < 1 || degree < 1) throw std::invalid_argument("expsums: phase needs k >= 1, degree >= 1");
  WeylPhase p;
  p.k = k;
  p.degree = degree;
  std::vector<int> g(k, 0);
  while (true) {
    int total = 0;
    for (int v : g) total += v;
    if (total >= 1 && total <= degree) p.gammas.push_back(g);
    int axis = k - 1;
    while (axis >= 0) {
      if (++g[axis] <= degree) break;
      g[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  p.xi.assign(p.gammas.size(), 0.0);
  p.rational = true;
  p.num.assign(p.gammas.size(), 0);
  p.den = 1;
  return p;
}

int WeylPhase::index_of(const MultiIndex& g) const {
  for (std::size_t i = 0; i < gammas.size(); ++i)
    if (gammas[i] == g) return static_cast<int>(i);
  throw std::invalid_argument("expsums: multi-index not in phase support");
}

void WeylPhase::set(const MultiIndex& g, double value) {
  xi[index_of(g)] = value;
  rational = false;
}

void WeylPhase::set_rational(const MultiIndex& g, std::int64_t numerator,
                             std::int64_t denominator) {
  if (denominator < 1) throw std::invalid_argument("expsums: rational coefficient denominator");
  const int idx = index_of(g);
  if (!rational) throw std::invalid_argument("expsums: phase already has non-rational entries");
  const std::int64_t l = std::lcm(den, denominator);
  const std::int64_t scaleOld = l / den, scaleNew = l / denominator;
  for (auto& n : num) n *= scaleOld;
  num[idx] = numerator * scaleNew;
  den = l;
  xi[idx] = static_cast<double>(numerator) / static_cast<double>(denominator);
}

namespace {

std::int64_t ipow_checked(std::int64_t base, int e) {
  __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > static_cast<__int128>(1) << 62 || r < -(static_cast<__int128>(1) << 62))
      throw std::overflow_error("expsums: monomial power overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t monomial_pow(const Point& n, const MultiIndex& g) {
  __int128 r = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (int e = 0; e < g[i]; ++e) {
      r *= n[i];
      if (r > static_cast<__int128>(1) << 62 || r < -(static_cast<__int128>(1) << 62))
        throw std::overflow_error("expsums: monomial power overflow");
    }
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

double WeylPhase::phase_mod1(const Point& n) const {
  if (static_cast<int>(n.size()) != k) throw std::invalid_argument("expsums: point arity");
  if (rational) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      if (num[i] == 0) continue;
      std::int64_t pw = 1;
      for (std::size_t c = 0; c < gammas[i].size(); ++c) {
        std::int64_t b = n[c] % den;
        if (b < 0) b += den;
        for (int e = 0; e < gammas[i][c]; ++e) pw = mulmod_i64(pw, b, den);
      }
      std::int64_t t = num[i] % den;
      if (t < 0) t += den;
      s = (s + mulmod_i64(t, pw, den)) % den;
    }
    return static_cast<double>(s) / static_cast<double>(den);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (xi[i] == 0.0) continue;
    acc = frac1(acc + mul_mod1(xi[i], monomial_pow(n, gammas[i])));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Weyl and Gauss sums

cplx weyl_sum(const WeylPhase& phase, const ConvexBody& region, const WeightFn& weight) {
  if (region.dim() != phase.k) throw std::invalid_argument("expsums: region dimension mismatch");
  const auto pts = lattice_points(region, true);
  KahanSumC total = block_reduce<KahanSumC>(
      pts.points.size(), 4096, KahanSumC{},
      [&](std::size_t lo, std::size_t hi) {
        KahanSumC acc;
        std::vector<double> nd(phase.k);
        for (std::size_t i = lo; i < hi; ++i) {
          const Point& n = pts.points[i];
          cplx term = unit_phase(phase.phase_mod1(n));
          if (weight) {
            for (int c = 0; c < phase.k; ++c) nd[c] = static_cast<double>(n[c]);
            term *= weight(nd);
          }
          acc.add(term);
        }
        return acc;
      },
      [](KahanSumC acc, const KahanSumC& part) {
        acc.add(part.value());
        return acc;
      });
  return total.value();
}

cplx gauss_sum(const RationalPoint& a, const MultiIndexSet& gamma) {
  if (a.dim() != gamma.dim()) throw std::invalid_argument("expsums: rational point arity");
  if (!a.in_Aq()) throw std::invalid_argument("expsums: numerators not in A_q");
  const int k = gamma.k;
  const std::int64_t q = a.q;
  double budget = 1.0;
  for (int i = 0; i < k; ++i) budget *= static_cast<double>(q);
  if (budget > 2e7) throw std::invalid_argument("expsums: q^k budget exceeded");
  KahanSumC acc;
  std::vector<std::int64_t> y(k, 1);
  while (true) {
    std::int64_t s = 0;
    for (int i = 0; i < gamma.dim(); ++i) {
      std::int64_t pw = 1;
      for (int c = 0; c < k; ++c)
        if (gamma.gammas[i][c] > 0)
          pw = mulmod_i64(pw, powmod_i64(y[c], gamma.gammas[i][c], q), q);
      s = (s + mulmod_i64(a.a[i] % q, pw, q)) % q;
    }
    acc.add(unit_phase(static_cast<double>(s) / static_cast<double>(q)));
    int axis = k - 1;
    while (axis >= 0) {
      if (++y[axis] <= q) break;
      y[axis] = 1;
      --axis;
    }
    if (axis < 0) break;
  }
  return acc.value() / budget;
}

// ---------------------------------------------------------------------------
// multipliers

cplx multiplier_m(const TorusPoint& xi, std::int64_t N, const MultiIndexSet& gamma) {
  if (xi.dim() != gamma.dim()) throw std::invalid_argument("expsums: xi arity");
  if (N < 1) throw std::invalid_argument("expsums: N must be positive");
  const int k = gamma.k;
  double budget = 1.0;
  for (int i = 0; i < k; ++i) budget *= static_cast<double>(N);
  if (budget > 2e7) throw std::invalid_argument("expsums: N^k budget exceeded");
  const std::size_t total = static_cast<std::size_t>(budget);
  KahanSumC sum = block_reduce<KahanSumC>(
      total, 8192, KahanSumC{},
      [&](std::size_t lo, std::size_t hi) {
        KahanSumC acc;
        Point y(k);
        for (std::size_t idx = lo; idx < hi; ++idx) {
          std::size_t t = idx;
          for (int c = k - 1; c >= 0; --c) {
            y[c] = 1 + static_cast<std::int64_t>(t % static_cast<std::size_t>(N));
            t /= static_cast<std::size_t>(N);
          }
          const Point Qy = canonical_eval(gamma, y);
          double ph = 0.0;
          for (int i = 0; i < gamma.dim(); ++i) {
            if (xi.x[i] == 0.0) continue;
            ph = frac1(ph + mul_mod1(xi.x[i], Qy[i]));
          }
          acc.add(unit_phase(ph));
        }
        return acc;
      },
      [](KahanSumC acc, const KahanSumC& part) {
        acc.add(part.value());
        return acc;
      });
  return sum.value() / budget;
}

cplx multiplier_m_piece(const TorusPoint& xi, const DyadicKernelPiece& piece,
                        const MultiIndexSet& gamma) {
  if (xi.dim() != gamma.dim()) throw std::invalid_argument("expsums: xi arity");
  const int k = gamma.k;
  const std::int64_t R = static_cast<std::int64_t>(1) << piece.j;
  double budget = 1.0;
  for (int i = 0; i < k; ++i) budget *= static_cast<double>(2 * R + 1);
  if (budget > 2e7) throw std::invalid_argument("expsums: annulus budget exceeded");
  KahanSumC acc;
  Point y(k, -R);
  std::vector<double> yd(k);
  while (true) {
    bool zero = true;
    for (int c = 0; c < k; ++c) zero = zero && y[c] == 0;
    if (!zero) {
      for (int c = 0; c < k; ++c) yd[c] = static_cast<double>(y[c]);
      const cplx w = piece.eval(yd);
      if (w != cplx(0.0, 0.0)) {
        const Point Qy = canonical_eval(gamma, y);
        double ph = 0.0;
        for (int i = 0; i < gamma.dim(); ++i) {
          if (xi.x[i] == 0.0) continue;
          ph = frac1(ph + mul_mod1(xi.x[i], Qy[i]));
        }
        acc.add(w * unit_phase(ph));
      }
    }
    int axis = k - 1;
    while (axis >= 0) {
      if (++y[axis] <= R) break;
      y[axis] = -R;
      --axis;
    }
    if (axis < 0) break;
  }
  return acc.value();
}

// ---------------------------------------------------------------------------
// continuous multipliers

cplx phi(const std::vector<double>& xi, std::int64_t N, const MultiIndexSet& gamma) {
  if (static_cast<int>(xi.size()) != gamma.dim())
    throw std::invalid_argument("expsums: xi arity");
  if (N < 1) throw std::invalid_argument("expsums: N must be positive");
  if (gamma.k > 3) throw std::invalid_argument("expsums: quadrature needs k <= 3");
  bool allZero = true;
  for (double v : xi) allZero = allZero && v == 0.0;
  if (allZero) return cplx(1.0, 0.0);
  const int k = gamma.k;
  const double Nd = static_cast<double>(N);
  PhaseFn ph = [&](const std::vector<double>& y) {
    double s = 0.0;
    for (int i = 0; i < gamma.dim(); ++i) {
      if (xi[i] == 0.0) continue;
      double mono = 1.0;
      for (int c = 0; c < k; ++c)
        for (int e = 0; e < gamma.gammas[i][c]; ++e) mono *= Nd * y[c];
      s += xi[i] * mono;
    }
    return kTwoPi * s;
  };
  auto res = integrate_oscillatory(ph, std::vector<double>(k, 0.0), std::vector<double>(k, 1.0),
                                   1e-8);
  if (!res.converged)
    throw std::runtime_error("expsums: phi quadrature did not converge; achieved error " +
                             std::to_string(res.errorEstimate));
  return res.value;
}

cplx phi_piece(const std::vector<double>& xi, const DyadicKernelPiece& piece,
               const MultiIndexSet& gamma) {
  if (static_cast<int>(xi.size()) != gamma.dim())
    throw std::invalid_argument("expsums: xi arity");
  if (gamma.k > 3) throw std::invalid_argument("expsums: quadrature needs k <= 3");
  const int k = gamma.k;
  BoxFn f = [&](const std::vector<double>& y) {
    const cplx w = piece.eval(y);
    if (w == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    double s = 0.0;
    for (int i = 0; i < gamma.dim(); ++i) {
      if (xi[i] == 0.0) continue;
      double mono = 1.0;
      for (int c = 0; c < k; ++c)
        for (int e = 0; e < gamma.gammas[i][c]; ++e) mono *= y[c];
      s += xi[i] * mono;
    }
    return w * unit_phase(s);
  };
  const double a = std::ldexp(1.0, piece.j - 2), b = std::ldexp(1.0, piece.j);
  auto res = annulus_integral(f, k, a, b, 1e-8);
  if (!res.converged)
    throw std::runtime_error("expsums: phi_piece quadrature did not converge; achieved error " +
                             std::to_string(res.errorEstimate));
  return res.value;
}

cplx psi_n(const std::vector<double>& xi, const std::vector<DyadicKernelPiece>& pieces, int n,
           const MultiIndexSet& gamma) {
  if (n < 0 || n >= static_cast<int>(pieces.size()))
    throw std::invalid_argument("expsums: n exceeds available pieces");
  cplx acc(0.0, 0.0);
  for (int j = 0; j <= n; ++j) acc += phi_piece(xi, pieces[j], gamma);
  return acc;
}

// ---------------------------------------------------------------------------
// approximation identity

ApproxErrorResult approx_error(const RationalPoint& a, const TorusPoint& xi, std::int64_t N,
                               const MultiIndexSet& gamma, double L1, double L2, double L3) {
  if (a.dim() != gamma.dim() || xi.dim() != gamma.dim())
    throw std::invalid_argument("expsums: arity mismatch");
  if (N < 1) throw std::invalid_argument("expsums: N must be positive");
  if (!(L1 >= static_cast<double>(N))) throw std::invalid_argument("expsums: need L1 >= N");
  if (!(L2 >= 1.0)) throw std::invalid_argument("expsums: need L2 >= 1");
  if (!(1.0 <= L3 && static_cast<double>(a.q) <= L3 &&
        L3 <= std::sqrt(static_cast<double>(N)) * (1.0 + 1e-12)))
    throw std::invalid_argument("expsums: need 1 <= q <= L3 <= sqrt(N)");
  const auto orders = gamma.orders();
  std::vector<double> delta(gamma.dim());
  for (int i = 0; i < gamma.dim(); ++i) {
    delta[i] = torus_reduce(xi.x[i] - static_cast<double>(a.a[i]) / static_cast<double>(a.q));
    const double window = std::pow(L1, -orders[i]) * L2;
    if (std::abs(delta[i]) > window * (1.0 + 1e-12))
      throw std::invalid_argument("expsums: xi outside the L1/L2 window around a/q");
  }
  const cplx mN = multiplier_m(xi, N, gamma);
  const cplx G = gauss_sum(a, gamma);
  const cplx PhiN = phi(delta, N, gamma);
  ApproxErrorResult out;
  out.error = std::abs(mN - G * PhiN);
  out.bound = L2 * L3 / static_cast<double>(N);
  return out;
}

// ---------------------------------------------------------------------------
// Dirichlet approximation (exact over the dyadic rational value of the double)

namespace {

struct DyadicRational {
  BigInt num;
  BigInt den;  // positive power of two
};

DyadicRational to_dyadic(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("expsums: non-finite theta");
  DyadicRational r;
  if (theta == 0.0) {
    r.num = 0;
    r.den = 1;
    return r;
  }
  int exp = 0;
  const double man = std::frexp(theta, &exp);  // theta = man * 2^exp, |man| in [1/2, 1)
  const std::int64_t m53 = static_cast<std::int64_t>(std::ldexp(man, 53));  // exact integer
  const int shift = exp - 53;
  r.num = m53;
  r.den = 1;
  if (shift >= 0)
    r.num <<= shift;
  else
    r.den <<= -shift;
  return r;
}

// |p/r - a/q| as an exact non-negative rational
std::pair<BigInt, BigInt> rational_distance(const DyadicRational& t, std::int64_t a,
                                            std::int64_t q) {
  BigInt num = t.num * q - t.den * a;
  if (num < 0) num = -num;
  return {num, t.den * q};
}

double rational_to_double(const BigInt& num, const BigInt& den) {
  return num.convert_to<double>() / den.convert_to<double>();
}

// continued-fraction convergents of the exact rational p/r, stopping at the
// last convergent with denominator <= bound
std::pair<std::int64_t, std::int64_t> cf_dirichlet(const DyadicRational& t, std::int64_t bound) {
  BigInt p = t.num, r = t.den;
  BigInt hPrev = 1, hPrev2 = 0;  // h_{-1}, h_{-2}
  BigInt kPrev = 0, kPrev2 = 1;  // k_{-1}, k_{-2}
  std::int64_t bestA = 0, bestQ = 1;
  for (int iter = 0; iter < 512 && r != 0; ++iter) {
    BigInt a = p / r;
    if (p % r != 0 && ((p < 0) != (r < 0))) a -= 1;  // floor division
    const BigInt rem = p - a * r;
    p = r;
    r = rem;
    const BigInt h = a * hPrev + hPrev2;
    const BigInt kq = a * kPrev + kPrev2;
    hPrev2 = hPrev;
    kPrev2 = kPrev;
    hPrev = h;
    kPrev = kq;
    if (kq > bound) break;
    bestA = h.convert_to<std::int64_t>();
    bestQ = kq.convert_to<std::int64_t>();
  }
  return {bestA, bestQ};
}

}  // namespace

std::pair<std::int64_t, std::int64_t> dirichlet(double theta, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("expsums: bound must be >= 1");
  if (!(std::abs(theta) <= 1e15)) throw std::invalid_argument("expsums: theta out of range");
  const DyadicRational t = to_dyadic(theta);
  auto [a, q] = cf_dirichlet(t, bound);
  // posted inequality |theta - a/q| <= 1/(q*bound), exact check
  auto [dn, dd] = rational_distance(t, a, q);
  if (dn * q * bound <= dd) return {a, q};
  if (bound <= 10000) {
    for (std::int64_t qq = 1; qq <= bound; ++qq) {
      const std::int64_t aa = std::llround(theta * static_cast<double>(qq));
      auto [en, ed] = rational_distance(t, aa, qq);
      if (en * qq * bound <= ed) {
        const std::int64_t g = std::gcd(std::abs(aa), qq);
        return {aa / (g == 0 ? 1 : g), qq / (g == 0 ? 1 : g)};
      }
    }
  }
  throw std::runtime_error("expsums: dirichlet failed to certify its inequality");
}

// ---------------------------------------------------------------------------
// Lemma-style rescaling of rational approximations

RescaleResult rescale_rational(double theta, std::int64_t a, std::int64_t q, std::int64_t Q,
                               std::int64_t N, int j, double beta, double betaPrime,
                               double beta2) {
  if (q < 1 || Q < 1 || N < 3 || j < 1) throw std::invalid_argument("expsums: bad rescale inputs");
  if (!(std::abs(theta) <= 1e6)) throw std::invalid_argument("expsums: theta out of range");
  if (std::gcd(std::abs(a), q) != 1)
    throw std::invalid_argument("expsums: a/q must be in lowest terms");
  if (!(beta2 <= std::min(beta / 2.0, beta - betaPrime) * (1.0 + 1e-12)))
    throw std::invalid_argument("expsums: need beta2 <= min(beta/2, beta - betaPrime)");
  const double L = std::log(static_cast<double>(N));
  const double Nj = std::pow(static_cast<double>(N), j);
  if (static_cast<double>(j) * std::log2(static_cast<double>(N)) > 62.0)
    throw std::invalid_argument("expsums: N^j exceeds the integer range");
  const std::int64_t NjInt = ipow_checked(N, j);
  if (!(std::pow(L, beta) <= static_cast<double>(q) * (1.0 + 1e-9) &&
        static_cast<double>(q) <= Nj * std::pow(L, -beta) * (1.0 + 1e-9)))
    throw std::invalid_argument("expsums: q outside the (log N)^beta window");
  if (!(static_cast<double>(Q) <= std::pow(L, betaPrime) * (1.0 + 1e-9)))
    throw std::invalid_argument("expsums: Q exceeds (log N)^betaPrime");
  const DyadicRational t = to_dyadic(theta);
  {
    auto [dn, dd] = rational_distance(t, a, q);
    if (dn * q * q > dd)
      throw std::invalid_argument("expsums: |theta - a/q| exceeds q^{-2}");
  }
  DyadicRational Qt = t;
  Qt.num *= Q;
  const double lb2 = std::pow(L, beta2);
  auto in_window = [&](std::int64_t qp) {
    return lb2 <= static_cast<double>(qp) * (1.0 + 1e-9) &&
           static_cast<double>(qp) <= Nj * std::pow(L, -beta2) * (1.0 + 1e-9);
  };
  auto meets_target = [&](std::int64_t ap, std::int64_t qp) {
    // |Q theta - a'/q'| <= (log N)^{beta2} / (q' N^j)
    auto [dn, dd] = rational_distance(Qt, ap, qp);
    const double lhs = rational_to_double(dn * qp * NjInt, dd);
    return lhs <= lb2 * (1.0 + 1e-9);
  };
  {
    const __int128 qa = static_cast<__int128>(Q) * a;
    if (qa > (static_cast<__int128>(1) << 62) || qa < -(static_cast<__int128>(1) << 62))
      throw std::overflow_error("expsums: Q*a overflow");
    const std::int64_t g = std::gcd(std::abs(static_cast<std::int64_t>(qa)), q);
    const std::int64_t a2 = static_cast<std::int64_t>(qa) / (g == 0 ? 1 : g),
                       q2 = q / (g == 0 ? 1 : g);
    if (in_window(q2) && meets_target(a2, q2)) return {a2, q2, 1};
  }
  // floor keeps q' <= M inside the window, and the convergent guarantee
  // |Q theta - a'/q'| < 1/(q'(M+1)) <= lb2/(q' N^j) supplies the target
  const std::int64_t M = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(static_cast<double>(NjInt) / lb2)));
  auto [ap, qp] = cf_dirichlet(Qt, M);
  if (in_window(qp) && meets_target(ap, qp)) return {ap, qp, 2};
  throw std::runtime_error("expsums: rescale dichotomy produced no admissible approximation");
}

// ---------------------------------------------------------------------------
// experiments

WeylDecayResult weyl_log_decay_experiment(const MultiIndex& gamma0, double alpha,
                                          const std::vector<std::int64_t>& Ngrid,
                                          const PhaseBuilder& builder) {
  const int k = static_cast<int>(gamma0.size());
  int d = 0;
  for (int v : gamma0) d += v;
  if (k < 1 || d < 1) throw std::invalid_argument("expsums: bad gamma0");
  WeylDecayResult out;
  out.betaRequired = (alpha + 2.0) * (2.0 * d * d - 2.0 * d + 1.0);
  for (std::int64_t N : Ngrid) {
    if (N < 2) throw std::invalid_argument("expsums: N grid entries must be >= 2");
    const PhaseChoice ch = builder(N);
    if (ch.q < 1) throw std::invalid_argument("expsums: phase builder returned q < 1");
    WeylPhase ph = WeylPhase::zero(k, d);
    if (ch.exactRational)
      ph.set_rational(gamma0, ch.a, ch.q);
    else
      ph.set(gamma0, ch.xiGamma0);
    const cplx S = weyl_sum(ph, ConvexBody::window(k, N));
    WeylDecayRow row;
    row.N = N;
    row.q = ch.q;
    row.snAbs = std::abs(S);
    const double L = std::log(static_cast<double>(N));
    row.bound = std::pow(static_cast<double>(N), k) * std::pow(L, -alpha);
    row.windowOk = std::pow(L, out.betaRequired) <= static_cast<double>(ch.q) &&
                   static_cast<double>(ch.q) <=
                       std::pow(static_cast<double>(N), d) * std::pow(L, -out.betaRequired);
    out.rows.push_back(row);
  }
  return out;
}

double decay_check(DecayKind kind, const std::vector<std::vector<double>>& grid,
                   std::int64_t NorJ, const MultiIndexSet& gamma,
                   const DyadicKernelPiece* piece) {
  if (kind == DecayKind::phiPiece && !piece)
    throw std::invalid_argument("expsums: phiPiece decay check needs a piece");
  const auto orders = gamma.orders();
  const int d = gamma.dim();
  const double scale =
      kind == DecayKind::phiPiece ? std::ldexp(1.0, static_cast<int>(NorJ)) : static_cast<double>(NorJ);
  double worst = 0.0;
  for (const auto& xi : grid) {
    if (static_cast<int>(xi.size()) != d) throw std::invalid_argument("expsums: grid point arity");
    double t = 0.0;
    for (int i = 0; i < d; ++i) t = std::max(t, std::pow(scale, orders[i]) * std::abs(xi[i]));
    double shape = 0.0;
    double value = 0.0;
    switch (kind) {
      case DecayKind::phiN:
        shape = std::min(1.0, t == 0.0 ? 1.0 : std::pow(t, -1.0 / d));
        value = std::abs(phi(xi, NorJ, gamma));
        break;
      case DecayKind::phiNminus1:
        shape = std::min(1.0, t);
        if (shape == 0.0) continue;
        value = std::abs(phi(xi, NorJ, gamma) - cplx(1.0, 0.0));
        break;
      case DecayKind::phiPiece:
        if (t == 0.0) continue;
        shape = std::min(t, std::pow(t, -1.0 / d));
        value = std::abs(phi_piece(xi, *piece, gamma));
        break;
    }
    worst = std::max(worst, value / shape);
  }
  return worst;
}

}  // namespace radon
