#include "radon/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "radon/arithmetic.hpp"
#include "radon/expsums.hpp"
#include "radon/gauss_scan.hpp"
#include "radon/geometry.hpp"
#include "radon/kernels.hpp"
#include "radon/lattice_function.hpp"
#include "radon/multiindex.hpp"
#include "radon/operators.hpp"
#include "radon/polynomial.hpp"
#include "radon/rademacher_menshov.hpp"
#include "radon/rng.hpp"

namespace radon {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::int64_t modinv(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, newT = 1, r = m, newR = ((a % m) + m) % m;
  while (newR != 0) {
    std::int64_t q = r / newR;
    t = std::exchange(newT, t - q * newT);
    r = std::exchange(newR, r - q * newR);
  }
  if (r != 1) throw std::invalid_argument("modinv: not invertible");
  return ((t % m) + m) % m;
}

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int c = k - 1;
    while (c >= 0 && cur[static_cast<std::size_t>(c)] == n - k + c) --c;
    if (c < 0) break;
    ++cur[static_cast<std::size_t>(c)];
    for (int j = c + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

PolynomialMapping random_mapping(CounterRng& rng, int k, int d0, int maxDeg) {
  PolynomialMapping P;
  P.k = k;
  P.d0 = d0;
  P.terms.resize(static_cast<std::size_t>(d0));
  for (int j = 0; j < d0; ++j) {
    int nterm = static_cast<int>(rng.next_int(1, 3));
    std::map<MultiIndex, std::int64_t> acc;
    for (int t = 0; t < nterm; ++t) {
      MultiIndex g(static_cast<std::size_t>(k), 0);
      int total = 0;
      for (int c = 0; c < k; ++c) {
        int e = static_cast<int>(rng.next_int(0, maxDeg - total));
        g[static_cast<std::size_t>(c)] = e;
        total += e;
      }
      if (total == 0) g[0] = 1;
      std::int64_t coeff = rng.next_int(1, 5) * (rng.next_int(0, 1) ? 1 : -1);
      acc[g] += coeff;
    }
    for (auto& [g, c] : acc)
      if (c != 0) P.terms[static_cast<std::size_t>(j)].emplace_back(g, c);
    if (P.terms[static_cast<std::size_t>(j)].empty())
      P.terms[static_cast<std::size_t>(j)].emplace_back(MultiIndex(static_cast<std::size_t>(k), 0), 1);
    if (P.terms[static_cast<std::size_t>(j)].front().first ==
        MultiIndex(static_cast<std::size_t>(k), 0)) {
      P.terms[static_cast<std::size_t>(j)].front().first[0] = 1;
    }
  }
  P.validate();
  return P;
}

LatticeFunction random_function(CounterRng& rng, int dim, int points, std::int64_t lo,
                                std::int64_t hi) {
  LatticeFunction f(dim);
  for (int i = 0; i < points; ++i) {
    Point p(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) p[static_cast<std::size_t>(c)] = rng.next_int(lo, hi);
    f.set(p, rng.next_complex(1.0));
  }
  return f;
}

double sup_diff(const std::map<Point, cplx>& a, const LatticeFunction& b) {
  double worst = 0.0;
  for (const auto& [p, v] : a) worst = std::max(worst, std::abs(v - b.at(p)));
  for (const auto& [p, v] : b.values()) {
    auto it = a.find(p);
    if (it == a.end()) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

// ----------------------------------------------------------------- criterion 1

CriterionResult c1_lifting(std::uint64_t seed) {
  CounterRng rng = CounterRng(seed).split("c1");
  int failures = 0;
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int k = static_cast<int>(rng.next_int(1, 2));
    int d0 = static_cast<int>(rng.next_int(1, 3));
    PolynomialMapping P = random_mapping(rng, k, d0, 3);
    Lifting lf = lift(P);
    std::vector<std::int64_t> y(static_cast<std::size_t>(k), -10);
    while (true) {
      std::vector<BigInt> lhs = apply_linear(lf.L, canonical_eval_big(lf.gamma, y));
      std::vector<BigInt> rhs = P.eval_big(y);
      ++checked;
      if (lhs != rhs) ++failures;
      int c = k - 1;
      while (c >= 0 && y[static_cast<std::size_t>(c)] == 10) {
        y[static_cast<std::size_t>(c)] = -10;
        --c;
      }
      if (c < 0) break;
      ++y[static_cast<std::size_t>(c)];
    }
  }
  CriterionResult r{1, "lifting-identity", failures == 0, ""};
  std::ostringstream d;
  d << "100 random mappings (k<=2, deg<=3), " << checked << " lattice points, " << failures
    << " exact mismatches";
  r.detail = d.str();
  return r;
}

// ----------------------------------------------------------------- criterion 2

CriterionResult c2_operators(std::uint64_t seed) {
  CounterRng rng = CounterRng(seed).split("c2");
  double worstOp = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    int k = static_cast<int>(rng.next_int(1, 2));
    int d0 = static_cast<int>(rng.next_int(1, 2));
    std::int64_t N = rng.next_int(1, 8);
    PolynomialMapping P = random_mapping(rng, k, d0, 3);
    LatticeFunction f = random_function(rng, d0, 6, -8, 8);
    CZKernel K = make_builtin_kernel(k == 1 ? "hilbert" : "riesz-1", k);

    std::map<Point, cplx> avg, trunc;
    std::vector<std::int64_t> y(static_cast<std::size_t>(k), 0);
    // average: {1..N}^k
    std::fill(y.begin(), y.end(), 1);
    while (true) {
      std::vector<std::int64_t> Py = P.eval(y);
      for (const auto& [z, v] : f.values()) {
        Point x = z;
        for (int c = 0; c < d0; ++c) x[static_cast<std::size_t>(c)] += Py[static_cast<std::size_t>(c)];
        avg[x] += v;
      }
      int c = k - 1;
      while (c >= 0 && y[static_cast<std::size_t>(c)] == N) {
        y[static_cast<std::size_t>(c)] = 1;
        --c;
      }
      if (c < 0) break;
      ++y[static_cast<std::size_t>(c)];
    }
    double scale = std::pow(static_cast<double>(N), -k);
    for (auto& [p, v] : avg) v *= scale;
    // truncated: {-N..N}^k \ {0}
    std::fill(y.begin(), y.end(), -N);
    while (true) {
      if (std::any_of(y.begin(), y.end(), [](std::int64_t c) { return c != 0; })) {
        std::vector<double> yd(y.begin(), y.end());
        cplx w = K.eval(yd);
        std::vector<std::int64_t> Py = P.eval(y);
        for (const auto& [z, v] : f.values()) {
          Point x = z;
          for (int c = 0; c < d0; ++c)
            x[static_cast<std::size_t>(c)] += Py[static_cast<std::size_t>(c)];
          trunc[x] += v * w;
        }
      }
      int c = k - 1;
      while (c >= 0 && y[static_cast<std::size_t>(c)] == N) {
        y[static_cast<std::size_t>(c)] = -N;
        --c;
      }
      if (c < 0) break;
      ++y[static_cast<std::size_t>(c)];
    }

    worstOp = std::max(worstOp, sup_diff(avg, apply_average(f, P, N).g));
    worstOp = std::max(worstOp, sup_diff(trunc, apply_truncated(f, P, K, N).g));
  }

  // cyclic-group Fourier identity on (Z_M)^2 for P(y) = (y, y^2)
  const int M = 16;
  MultiIndexSet gamma = build_gamma(1, 2);
  PolynomialMapping P = PolynomialMapping::canonical(gamma);
  double worstFourier = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::int64_t N = rng.next_int(1, 8);
    LatticeFunction f = random_function(rng, 2, 5, 0, M - 1);
    LatticeFunction g = apply_average(f, P, N).g;
    auto wrap = [&](const LatticeFunction& h) {
      std::vector<cplx> grid(static_cast<std::size_t>(M * M), cplx(0, 0));
      for (const auto& [p, v] : h.values()) {
        std::int64_t x0 = ((p[0] % M) + M) % M;
        std::int64_t x1 = ((p[1] % M) + M) % M;
        grid[static_cast<std::size_t>(x0 * M + x1)] += v;
      }
      return grid;
    };
    std::vector<cplx> F = wrap(f), G = wrap(g);
    for (int j0 = 0; j0 < M; ++j0) {
      for (int j1 = 0; j1 < M; ++j1) {
        cplx fhat(0, 0), ghat(0, 0);
        for (int x0 = 0; x0 < M; ++x0)
          for (int x1 = 0; x1 < M; ++x1) {
            cplx ph = unit_phase(static_cast<double>(j0 * x0 + j1 * x1) / M);
            fhat += F[static_cast<std::size_t>(x0 * M + x1)] * ph;
            ghat += G[static_cast<std::size_t>(x0 * M + x1)] * ph;
          }
        cplx m = multiplier_m(TorusPoint({static_cast<double>(j0) / M, static_cast<double>(j1) / M}),
                              N, gamma);
        worstFourier = std::max(worstFourier, std::abs(ghat - m * fhat));
      }
    }
  }

  CriterionResult r{2, "operator-oracle-equivalence", worstOp <= 1e-12 && worstFourier <= 1e-9, ""};
  r.detail = "50 brute-force instances, max |diff| = " + fmt(worstOp) +
             " (tol 1e-12); 10 cyclic Fourier instances on (Z_16)^2, max |diff| = " +
             fmt(worstFourier) + " (tol 1e-9)";
  return r;
}

// ----------------------------------------------------------------- criterion 3

CriterionResult c3_rademacher_menshov(std::uint64_t seed) {
  CounterRng rng = CounterRng(seed).split("c3");
  int rmFailures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int s = trial % 9;
    std::size_t len = (static_cast<std::size_t>(1) << s) + 1;
    std::vector<cplx> a(len);
    for (auto& v : a) v = rng.next_complex(1.0);
    std::size_t j0 = static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(len) - 1));
    if (!rm_check(a, j0)) ++rmFailures;
  }

  int decompFailures = 0;
  std::int64_t pairs = 0;
  for (std::int64_t n = 1; n <= 1024; ++n) {
    for (std::int64_t m = 0; m < n; ++m) {
      ++pairs;
      auto pieces = dyadic_interval_decomposition(m, n, 10);
      std::int64_t cur = m;
      bool ok = true;
      std::map<int, int> perScale;
      for (const auto& iv : pieces) {
        if (iv.lo() != cur) ok = false;
        if (iv.hi() <= iv.lo()) ok = false;
        cur = iv.hi();
        if (++perScale[iv.i] > 2) ok = false;
      }
      if (cur != n) ok = false;
      if (!ok) ++decompFailures;
    }
  }

  CriterionResult r{3, "rademacher-menshov", rmFailures == 0 && decompFailures == 0, ""};
  std::ostringstream d;
  d << "10^4 random sequences (s<=8): " << rmFailures << " inequality failures; " << pairs
    << " interval pairs (n<=2^10): " << decompFailures
    << " invalid decompositions (cover/scale-multiplicity)";
  r.detail = d.str();
  return r;
}

// ----------------------------------------------------------------- criterion 4

CriterionResult c4_gauss(std::uint64_t seed) {
  CounterRng rng = CounterRng(seed).split("c4");
  double worstCrt = 0.0;
  for (int d = 1; d <= 3; ++d) {
    MultiIndexSet gamma = build_gamma(1, d);
    for (std::int64_t q1 = 2; q1 <= 30; ++q1) {
      for (std::int64_t q2 = q1 + 1; q2 <= 30; ++q2) {
        if (std::gcd(q1, q2) != 1) continue;
        std::int64_t q = q1 * q2;
        std::int64_t c1 = modinv(q2 % q1, q1);
        std::int64_t c2 = modinv(q1 % q2, q2);
        for (int draw = 0; draw < 3; ++draw) {
          std::vector<std::int64_t> a(static_cast<std::size_t>(d));
          do {
            for (auto& v : a) v = rng.next_int(1, q);
          } while (!RationalPoint(a, q).in_Aq());
          std::vector<std::int64_t> a1(a.size()), a2(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) {
            a1[i] = (a[i] % q1) * c1 % q1;
            if (a1[i] == 0) a1[i] = q1;
            a2[i] = (a[i] % q2) * c2 % q2;
            if (a2[i] == 0) a2[i] = q2;
          }
          cplx lhs = gauss_sum(RationalPoint(a, q), gamma);
          cplx rhs = gauss_sum(RationalPoint(a1, q1), gamma) *
                     gauss_sum(RationalPoint(a2, q2), gamma);
          worstCrt = std::max(worstCrt, std::abs(lhs - rhs));
        }
      }
    }
  }
  bool crtPass = worstCrt <= 1e-10;

  MultiIndexSet gamma2 = build_gamma(1, 2);
  double worstQuad = 0.0;
  for (std::int64_t j = 1; j <= 4; ++j) {
    double g = std::abs(gauss_sum(RationalPoint({5, j}, 5), gamma2));
    worstQuad = std::max(worstQuad, std::fabs(g - 1.0 / std::sqrt(5.0)));
  }
  bool quadPass = worstQuad <= 1e-10;

  std::ostringstream viol;
  std::int64_t violations = 0;
  double worstRatio = 0.0;
  for (int d = 1; d <= 3; ++d) {
    int listed = 0;
    for (const auto& row : gauss_max_scan(d, 500, 0.05)) {
      if (row.maxAbsG > row.bound + 1e-12) {
        ++violations;
        worstRatio = std::max(worstRatio, row.ratio);
        if (listed < 3) {
          viol << " d=" << d << ",q=" << row.q << ":max|G|=" << fmt(row.maxAbsG)
               << ">bound=" << fmt(row.bound) << ";";
          ++listed;
        }
      }
    }
  }
  bool decayPass = violations == 0;

  CriterionResult r{4, "gauss-sums", crtPass && quadPass && decayPass, ""};
  std::ostringstream det;
  det << "CRT multiplicativity: max |diff| = " << fmt(worstCrt)
      << " (tol 1e-10, all coprime q1<q2<=30, d<=3, 3 sampled numerators each); "
      << "pure quadratic |G(a/5)|: max dev = " << fmt(worstQuad) << " (tol 1e-10); "
      << "decay surrogate max_a|G(a/q)| <= q^(-1/d+0.05) for q<=500: " << violations
      << " violations, worst ratio " << fmt(worstRatio);
  if (violations > 0) det << ", first:" << viol.str();
  r.detail = det.str();
  return r;
}

// ----------------------------------------------------------------- criterion 5

CriterionResult c5_approximation(std::uint64_t seed) {
  (void)seed;
  MultiIndexSet gamma = build_gamma(1, 1);
  RationalPoint a({1}, 2);
  std::ostringstream det;
  std::vector<double> lx, ly;
  det << "error ladder (xi = 1/2 + 1/(2N), L1=N, L2=1, L3=2):";
  for (std::int64_t N : {16, 32, 64, 128, 256}) {
    TorusPoint xi({0.5 + 0.5 / static_cast<double>(N)});
    ApproxErrorResult e = approx_error(a, xi, N, gamma, static_cast<double>(N), 1.0, 2.0);
    det << " N=" << N << ":err=" << fmt(e.error) << ",bound=" << fmt(e.bound) << ";";
    lx.push_back(std::log(static_cast<double>(N)));
    ly.push_back(std::log(e.error));
  }
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CriterionResult r{5, "approximation-identity", slope >= -1.25 && slope <= -0.75, ""};
  det << " log-log slope = " << fmt(slope) << " (target [-1.25,-0.75])";
  r.detail = det.str();
  return r;
}

// ----------------------------------------------------------------- criterion 6

CriterionResult c6_weyl_decay(std::uint64_t seed) {
  (void)seed;
  const std::vector<std::int64_t> grid{1 << 10, 1 << 12, 1 << 14, 1 << 16};
  MultiIndex gamma0{2};

  PhaseBuilder main = [](std::int64_t N) {
    double L = std::log(static_cast<double>(N));
    std::int64_t q = static_cast<std::int64_t>(std::ceil(L * L));
    while (!is_prime_i64(q)) ++q;
    std::int64_t a = (q - 1) / 2;
    return PhaseChoice{static_cast<double>(a) / static_cast<double>(q), a, q, true};
  };
  PhaseBuilder control = [](std::int64_t) { return PhaseChoice{0.25, 1, 4, true}; };

  WeylDecayResult mainRes = weyl_log_decay_experiment(gamma0, 0.0, grid, main);
  WeylDecayResult ctrlRes = weyl_log_decay_experiment(gamma0, 0.0, grid, control);

  bool decreasing = true;
  std::ostringstream det;
  det << "minor-arc rows (q ~ (ln N)^2):";
  double prev = 2.0;
  for (const auto& row : mainRes.rows) {
    double v = row.snAbs / static_cast<double>(row.N);
    det << " N=" << row.N << ",q=" << row.q << ",|S|/N=" << fmt(v)
        << ",windowOk=" << (row.windowOk ? "1" : "0") << ";";
    if (v >= prev) decreasing = false;
    prev = v;
  }
  bool controlOk = true;
  det << " control rows (xi=1/4):";
  for (const auto& row : ctrlRes.rows) {
    double v = row.snAbs / static_cast<double>(row.N);
    det << " N=" << row.N << ",|S|/N=" << fmt(v) << ";";
    if (v < 0.1) controlOk = false;
  }
  det << " betaRequired=" << fmt(mainRes.betaRequired)
      << " (asymptotic minor-arc window empty at these N; q placed at (ln N)^2 instead, "
         "reported per run)";
  CriterionResult r{6, "weyl-log-decay-trend", decreasing && controlOk, det.str()};
  return r;
}

// ----------------------------------------------------------------- criterion 7

CriterionResult c7_van_der_corput(std::uint64_t seed) {
  MultiIndexSet gamma = build_gamma(1, 2);
  std::map<std::int64_t, std::pair<double, double>> constants;
  for (std::int64_t N : {4, 8, 16}) {
    CounterRng rng = CounterRng(seed).split("c7-grid");  // identical draws per N
    std::vector<std::vector<double>> grid;
    for (int i = 0; i < 500; ++i)
      grid.push_back({rng.next_real() - 0.5, rng.next_real() - 0.5});
    const double Nd = static_cast<double>(N);
    for (int i = 0; i < 500; ++i) {
      double t = std::pow(10.0, -2.0 + rng.next_real() * (std::log10(1.9) + 2.0));
      double theta = rng.next_real();
      bool linMax = rng.next_int(0, 1) == 1;
      double s1 = rng.next_int(0, 1) ? 1.0 : -1.0;
      double s2 = rng.next_int(0, 1) ? 1.0 : -1.0;
      double x1 = linMax ? t / Nd : theta * t / Nd;
      double x2 = linMax ? theta * t / (Nd * Nd) : t / (Nd * Nd);
      grid.push_back({s1 * x1, s2 * x2});
    }
    constants[N] = {decay_check(DecayKind::phiN, grid, N, gamma),
                    decay_check(DecayKind::phiNminus1, grid, N, gamma)};
  }
  double lo83 = 1e300, hi83 = 0, lo84 = 1e300, hi84 = 0;
  std::ostringstream det;
  for (const auto& [N, c] : constants) {
    det << " N=" << N << ":c_size=" << fmt(c.first) << ",c_smooth=" << fmt(c.second) << ";";
    lo83 = std::min(lo83, c.first);
    hi83 = std::max(hi83, c.first);
    lo84 = std::min(lo84, c.second);
    hi84 = std::max(hi84, c.second);
  }
  bool stable = hi83 <= 2.0 * lo83 && hi84 <= 2.0 * lo84;
  CriterionResult r{7, "van-der-corput-constants", stable, ""};
  r.detail = "fitted constants on a 10^3-point grid (500 uniform + 500 scale-matched):" +
             det.str() + " spreads " + fmt(hi83 / lo83) + ", " + fmt(hi84 / lo84) +
             " (must be <= 2)";
  return r;
}

// ----------------------------------------------------------------- criterion 8

CriterionResult c8_iw_sets(std::uint64_t seed) {
  (void)seed;
  std::ostringstream det;
  bool ok = true;
  for (double rho : {0.5, 1.0}) {
    std::vector<BigInt> prev;
    for (std::int64_t N = 1; N <= 12; ++N) {
      DenominatorSet S = build_denominator_set(N, rho);
      std::vector<BigInt> members = S.all_members();
      for (std::int64_t q = 1; q <= N; ++q)
        if (!S.contains(q)) {
          ok = false;
          det << " N_N not contained (N=" << N << ",rho=" << rho << ",q=" << q << ");";
        }
      if (!std::includes(members.begin(), members.end(), prev.begin(), prev.end())) {
        ok = false;
        det << " monotonicity broken at N=" << N << ",rho=" << rho << ";";
      }
      prev = members;
      for (const BigInt& q : members) {
        auto f = unique_factorization(q, S);
        if (f.Q * f.w != q || S.Q0 % f.Q != 0) {
          ok = false;
          det << " bad factorization q=" << q.str() << ";";
          continue;
        }
        // exhaustive uniqueness: every admissible window sub-product must be w
        std::vector<std::pair<std::int64_t, int>> winFac;
        BigInt rest = q;
        for (std::int64_t p : S.primesWindow) {
          int e = 0;
          while (rest % p == 0) {
            rest /= p;
            ++e;
          }
          if (e > 0) winFac.emplace_back(p, e);
        }
        int count = 0;
        std::vector<int> pick(winFac.size(), 0);
        while (true) {
          BigInt w = 1;
          int distinct = 0;
          bool admissible = true;
          for (std::size_t i = 0; i < winFac.size(); ++i) {
            int e = pick[i];
            if (e > 0) {
              ++distinct;
              if (e > S.D) admissible = false;
              for (int t = 0; t < e; ++t) w *= winFac[i].first;
            }
          }
          if (admissible && distinct <= S.D && S.Q0 % (q / w) == 0 && q % w == 0) ++count;
          int c = static_cast<int>(winFac.size()) - 1;
          while (c >= 0 && pick[static_cast<std::size_t>(c)] == winFac[static_cast<std::size_t>(c)].second) {
            pick[static_cast<std::size_t>(c)] = 0;
            --c;
          }
          if (c < 0) break;
          ++pick[static_cast<std::size_t>(c)];
        }
        if (count != 1) {
          ok = false;
          det << " non-unique factorization q=" << q.str() << " (count=" << count << ");";
        }
      }
    }
  }
  CriterionResult r{8, "ionescu-wainger-sets", ok, ""};
  r.detail = std::string("N<=12, rho in {1/2,1}: containment, monotonicity, unique Q*w ") +
             "factorization, all exhaustive" + (ok ? "" : ";" + det.str());
  return r;
}

// ----------------------------------------------------------------- criterion 9

CriterionResult c9_combinatorics(std::uint64_t seed) {
  bool ok = true;
  std::ostringstream det;
  int familiesChecked = 0;
  for (std::int64_t N = 1; N <= 12; ++N) {
    for (int k = 1; k <= std::min<std::int64_t>(3, N); ++k) {
      PartitionFamily fam = partition_family(N, k, seed ^ (static_cast<std::uint64_t>(N) << 8) ^
                                                     static_cast<std::uint64_t>(k));
      ++familiesChecked;
      if (static_cast<std::int64_t>(fam.partitions.size()) > fam.rBound) {
        ok = false;
        det << " size bound broken N=" << N << ",k=" << k << ";";
      }
      for (const auto& E : index_subsets(static_cast<int>(N), k)) {
        bool covered = false;
        for (const auto& labels : fam.partitions) {
          std::set<int> hit;
          for (int idx : E) hit.insert(labels[static_cast<std::size_t>(idx)]);
          if (static_cast<int>(hit.size()) == k) {
            covered = true;
            break;
          }
        }
        if (!covered) {
          ok = false;
          det << " uncovered subset N=" << N << ",k=" << k << ";";
          break;
        }
      }
    }
  }

  ODecomposition dec = decompose_o_property({5, 7, 11}, 2, 12, seed);
  std::set<std::int64_t> covered;
  for (std::size_t i = 0; i < dec.lambdas.size(); ++i) {
    OPropertyCheck chk = o_property_check(dec.lambdas[i], 2);
    if (!chk.ok) {
      ok = false;
      det << " emitted set " << dec.labels[i] << " fails O property: " << chk.refutation << ";";
    }
    covered.insert(dec.lambdas[i].begin(), dec.lambdas[i].end());
  }
  std::set<std::int64_t> target;
  std::vector<std::int64_t> V{5, 7, 11};
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (int e = 1; e <= 2; ++e) target.insert(static_cast<std::int64_t>(std::pow(V[i], e)));
    for (std::size_t j = i + 1; j < V.size(); ++j)
      for (int e1 = 1; e1 <= 2; ++e1)
        for (int e2 = 1; e2 <= 2; ++e2)
          target.insert(static_cast<std::int64_t>(std::pow(V[i], e1) * std::pow(V[j], e2)));
  }
  if (covered != target) {
    ok = false;
    det << " decompose_o_property coverage mismatch;";
  }
  if (static_cast<std::int64_t>(dec.lambdas.size()) > dec.familyBound) {
    ok = false;
    det << " family bound exceeded;";
  }

  CriterionResult r{9, "combinatorics", ok, ""};
  std::ostringstream summary;
  summary << familiesChecked << " partition families (N<=12, k<=3) verified exhaustively; "
          << "decompose_o_property({5,7,11}, D=2): " << dec.lambdas.size() << " sets (bound "
          << dec.familyBound << "), covers Pi(V) with " << target.size() << " elements";
  r.detail = summary.str() + (ok ? "" : ";" + det.str());
  return r;
}

// ---------------------------------------------------------------- criterion 10

CriterionResult c10_norm_ratios(std::uint64_t seed) {
  CounterRng rng = CounterRng(seed).split("c10");
  PolynomialMapping P = PolynomialMapping::one_dim({{1}, {0, 1}});
  FunctionFamily one, four;
  one.members.push_back(delta(Point{0, 0}));
  for (int i = 0; i < 4; ++i) four.members.push_back(random_function(rng, 2, 3, -4, 4));

  bool ok = true;
  std::ostringstream det;
  for (double p : {1.5, 2.0, 3.0}) {
    for (const FunctionFamily* fam : {&one, &four}) {
      double r6 = norm_ratio_experiment(*fam, P, OperatorKind::average, p, dyadic_grid(6)).ratio;
      double r8 = norm_ratio_experiment(*fam, P, OperatorKind::average, p, dyadic_grid(8)).ratio;
      det << " p=" << fmt(p) << ",T=" << fam->members.size() << ":r6=" << fmt(r6)
          << ",r8=" << fmt(r8) << ";";
      if (!(r8 <= 1.10 * r6 + 1e-12) || !(r8 < 1e3)) ok = false;
    }
  }
  CriterionResult r{10, "maximal-norm-ratios", ok, ""};
  r.detail = "sup_N |M_N| ratios, P(x)=(x,x^2), grids 2^6 vs 2^8 (increase must be <= 10%):" +
             det.str();
  return r;
}

// ---------------------------------------------------------------- criterion 11

CriterionResult c11_geometry(std::uint64_t seed) {
  (void)seed;
  double loC = 1e300, hiC = 0.0, worstResid = 0.0;
  std::ostringstream det;
  for (double r : {25.0, 50.0, 100.0, 200.0}) {
    ConvexBody disk = ConvexBody::ball({0.0, 0.0}, r);
    BoundaryCount bc = boundary_near_count(disk, 1.0, 0.2);
    double c = static_cast<double>(bc.count) / r;
    loC = std::min(loC, c);
    hiC = std::max(hiC, c);
    std::int64_t n = lattice_points(disk, false).count;
    double resid = std::fabs(static_cast<double>(n) - kPi * r * r) / r;
    worstResid = std::max(worstResid, resid);
    det << " r=" << fmt(r) << ":count=" << n << ",near/(s*r)=" << fmt(c)
        << ",|resid|/r=" << fmt(resid) << ";";
  }
  bool ok = hiC <= 4.0 * loC && worstResid <= 4.0;
  CriterionResult r{11, "geometry-counts", ok, ""};
  r.detail = "disks k=2, s=1:" + det.str() + " boundary-count spread " + fmt(hiC / loC) +
             " (<=4), max Davenport residual ratio " + fmt(worstResid) + " (<=4)";
  return r;
}

// ---------------------------------------------------------------- criterion 12

CriterionResult c12_determinism(std::uint64_t seed) {
  const std::vector<int> subset{1, 3, 5, 8, 9, 11};
  auto runOnce = [&] {
    std::vector<CriterionResult> rs;
    for (int id : subset) rs.push_back(run_criterion(id, seed));
    return acceptance_summary_json(rs, seed);
  };
  std::string first = runOnce();
  std::string second = runOnce();
  CriterionResult r{12, "determinism", first == second, ""};
  std::ostringstream det;
  det << "criteria {1,3,5,8,9,11} run twice in-process: summaries "
      << (first == second ? "byte-identical" : "DIFFER") << " (" << first.size()
      << " bytes); the two-process CLI check runs in the test suite";
  r.detail = det.str();
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return c1_lifting(seed);
    case 2: return c2_operators(seed);
    case 3: return c3_rademacher_menshov(seed);
    case 4: return c4_gauss(seed);
    case 5: return c5_approximation(seed);
    case 6: return c6_weyl_decay(seed);
    case 7: return c7_van_der_corput(seed);
    case 8: return c8_iw_sets(seed);
    case 9: return c9_combinatorics(seed);
    case 10: return c10_norm_ratios(seed);
    case 11: return c11_geometry(seed);
    case 12: return c12_determinism(seed);
    default: throw std::invalid_argument("run_criterion: id must be 1..12");
  }
}

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string acceptance_summary_json(const std::vector<CriterionResult>& results,
                                    std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  bool all = true;
  j["criteria"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["detail"] = r.detail;
    j["criteria"].push_back(c);
    all = all && r.pass;
  }
  j["allPass"] = all;
  return j.dump(2) + "\n";
}

}  // namespace radon
