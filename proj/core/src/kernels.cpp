#include "radon/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radon/quadrature.hpp"

namespace radon {

namespace {

double mollifier(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double abs2(const std::vector<double>& y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return s;
}

}  // namespace

double smooth_step(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double a = mollifier(2.0 - r), b = mollifier(r - 1.0);
  return a / (a + b);
}

double dyadic_chi(double r) { return smooth_step(r) - smooth_step(2.0 * r); }

double dyadic_psi(int j, double absY) {
  return dyadic_chi(absY * std::ldexp(1.0, 1 - j));
}

CZKernel make_builtin_kernel(const std::string& name, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("kernels: dimension must be 1..3");
  if (name == "hilbert") {
    if (k != 1) throw std::invalid_argument("kernels: hilbert needs k=1");
    CZKernel K;
    K.k = 1;
    K.name = name;
    K.czConstant = 2.0;
    K.eval = [](const std::vector<double>& y) { return cplx(1.0 / y[0], 0.0); };
    K.grad = [](const std::vector<double>& y) {
      return std::vector<cplx>{cplx(-1.0 / (y[0] * y[0]), 0.0)};
    };
    return K;
  }
  if (name.rfind("riesz-", 0) == 0) {
    int i = 1;
    const std::string tail = name.substr(6);
    if (tail != "i") {
      std::size_t pos = 0;
      i = std::stoi(tail, &pos);
      if (pos != tail.size()) throw std::invalid_argument("kernels: bad riesz index");
    }
    if (i < 1 || i > k) throw std::invalid_argument("kernels: riesz index out of range");
    CZKernel K;
    K.k = k;
    K.name = name;
    K.czConstant = 4.0;
    const int ci = i - 1;
    K.eval = [ci, k](const std::vector<double>& y) {
      const double r = std::sqrt(abs2(y));
      return cplx(y[ci] / std::pow(r, k + 1), 0.0);
    };
    K.grad = [ci, k](const std::vector<double>& y) {
      const double r2 = abs2(y), r = std::sqrt(r2);
      const double rk1 = std::pow(r, k + 1), rk3 = std::pow(r, k + 3);
      std::vector<cplx> g(y.size());
      for (std::size_t j = 0; j < y.size(); ++j) {
        double v = -(k + 1) * y[ci] * y[j] / rk3;
        if (static_cast<int>(j) == ci) v += 1.0 / rk1;
        g[j] = cplx(v, 0.0);
      }
      return g;
    };
    return K;
  }
  throw std::invalid_argument("kernels: unknown kernel '" + name + "'");
}

std::vector<cplx> kernel_gradient(const CZKernel& K, const std::vector<double>& y) {
  if (K.grad) return K.grad(y);
  const double h = 1e-6 * std::max(1.0, std::sqrt(abs2(y)));
  std::vector<cplx> g(y.size());
  std::vector<double> yp = y, ym = y;
  for (std::size_t i = 0; i < y.size(); ++i) {
    yp[i] = y[i] + h;
    ym[i] = y[i] - h;
    g[i] = (K.eval(yp) - K.eval(ym)) / (2.0 * h);
    yp[i] = y[i];
    ym[i] = y[i];
  }
  return g;
}

namespace {

std::vector<std::vector<double>> sample_directions(int k) {
  std::vector<std::vector<double>> dirs;
  if (k == 1) {
    dirs.push_back({1.0});
    dirs.push_back({-1.0});
    return dirs;
  }
  for (int i = 0; i < k; ++i)
    for (double s : {1.0, -1.0}) {
      std::vector<double> d(k, 0.0);
      d[i] = s;
      dirs.push_back(d);
    }
  if (k == 2) {
    for (int t = 0; t < 8; ++t) {
      const double th = kTwoPi * (t + 0.5) / 8.0;
      dirs.push_back({std::cos(th), std::sin(th)});
    }
  } else {
    for (double a : {-1.0, 1.0})
      for (double b : {-1.0, 1.0})
        for (double c : {-1.0, 1.0}) {
          const double s = std::sqrt(3.0);
          dirs.push_back({a / s, b / s, c / s});
        }
  }
  return dirs;
}

double grad_norm(const std::vector<cplx>& g) {
  double s = 0.0;
  for (const auto& v : g) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

CzReport cz_check(const CZKernel& K, int radialSamples, const std::vector<double>& lambdaGrid) {
  if (radialSamples < 1) throw std::invalid_argument("kernels: radialSamples must be positive");
  if (!K.eval) throw std::invalid_argument("kernels: kernel has no evaluator");
  CzReport rep;
  const auto dirs = sample_directions(K.k);
  std::vector<double> y(K.k);
  for (int i = 0; i < radialSamples; ++i) {
    const double r = std::ldexp(1.0, std::min(i, 900));  // dyadic radii, |y| >= 1
    for (const auto& d : dirs) {
      for (int c = 0; c < K.k; ++c) y[c] = r * d[c];
      const cplx v = K.eval(y);
      const double gn = grad_norm(kernel_gradient(K, y));
      const double ratio = std::pow(r, K.k) * std::abs(v) + std::pow(r, K.k + 1) * gn;
      if (!(ratio <= rep.worstSizeRatio)) {
        rep.worstSizeRatio = ratio;
        rep.worstSizeRadius = r;
      }
    }
  }
  for (double lambda : lambdaGrid) {
    if (lambda < 1.0) throw std::invalid_argument("kernels: lambda grid entries must be >= 1");
    if (lambda == 1.0) continue;
    auto q = annulus_integral(K.eval, K.k, 1.0, lambda, 1e-10);
    const double c = std::abs(q.value);
    if (c > rep.worstCancellation) {
      rep.worstCancellation = c;
      rep.worstCancellationLambda = lambda;
    }
  }
  rep.sizePass = rep.worstSizeRatio <= K.czConstant;
  rep.cancelPass = rep.worstCancellation <= K.czConstant;
  return rep;
}

namespace {

double bump(double r) { return (r > 0.5 && r < 2.0) ? std::exp(-1.0 / ((r - 0.5) * (2.0 - r))) : 0.0; }

}  // namespace

std::vector<DyadicKernelPiece> dyadic_decompose_kernel(const CZKernel& K, int jmax) {
  if (jmax < 1) throw std::invalid_argument("kernels: jmax must be >= 1");
  const int k = K.k;
  std::vector<DyadicKernelPiece> out;
  for (int j = 0; j <= jmax; ++j) {
    DyadicKernelPiece piece;
    piece.j = j;
    piece.meanZero = j >= 1;
    const double scale = std::ldexp(1.0, j - 1);
    KernelFn base = [K, j](const std::vector<double>& y) -> cplx {
      double r = std::sqrt(abs2(y));
      const double w = dyadic_psi(j, r);
      if (w == 0.0) return cplx(0.0, 0.0);
      return w * K.eval(y);
    };
    if (j == 0) {
      piece.eval = std::move(base);
      out.push_back(std::move(piece));
      continue;
    }
    const double a = std::ldexp(1.0, j - 2), b = std::ldexp(1.0, j);
    auto mean = annulus_integral(base, k, a, b, 1e-12);
    BoxFn bumpF = [scale](const std::vector<double>& y) {
      return cplx(bump(std::sqrt(abs2(y)) / scale), 0.0);
    };
    auto bumpMass = annulus_integral(bumpF, k, a, b, 1e-12);
    const double c = mean.value.real() / bumpMass.value.real();
    piece.correctionMass = c;
    piece.eval = [base, c, scale](const std::vector<double>& y) -> cplx {
      cplx v = base(y);
      if (c != 0.0) v -= c * bump(std::sqrt(abs2(y)) / scale);
      return v;
    };
    out.push_back(std::move(piece));
  }
  return out;
}

double AveragingKernel::total_mass() const {
  std::int64_t total = 0;
  for (const auto& [p, c] : counts) total += c;
  double nk = 1.0;
  for (int i = 0; i < gamma.k; ++i) nk *= static_cast<double>(N);
  return static_cast<double>(total) / nk;
}

AveragingKernel averaging_kernel(std::int64_t N, const MultiIndexSet& gamma) {
  if (N < 1) throw std::invalid_argument("kernels: N must be positive");
  const int k = gamma.k;
  double budget = 1.0;
  for (int i = 0; i < k; ++i) budget *= static_cast<double>(N);
  if (budget > 2e7) throw std::invalid_argument("kernels: N^k too large for averaging kernel");
  AveragingKernel out;
  out.N = N;
  out.gamma = gamma;
  std::vector<std::int64_t> y(k, 1);
  while (true) {
    out.counts[canonical_eval(gamma, y)] += 1;
    int axis = k - 1;
    while (axis >= 0) {
      if (++y[axis] <= N) break;
      y[axis] = 1;
      --axis;
    }
    if (axis < 0) break;
  }
  const double nk = budget;
  out.a = LatticeFunction(gamma.dim());
  for (const auto& [p, c] : out.counts) out.a.set(p, cplx(static_cast<double>(c) / nk, 0.0));
  return out;
}

}  // namespace radon
