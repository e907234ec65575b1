#include "radon/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace radon {

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  if (n < 1 || n > 256) throw std::invalid_argument("quadrature: order out of range");
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace {

constexpr int kOrderLo = 6;
constexpr int kOrderHi = 12;

struct Panel {
  std::vector<double> lo, hi;
  cplx value{0.0, 0.0};
  double error = 0.0;
};

cplx tensor_gl(const BoxFn& f, const std::vector<double>& lo, const std::vector<double>& hi,
               int order) {
  const auto& [nodes, weights] = gauss_legendre(order);
  const int k = static_cast<int>(lo.size());
  std::vector<int> idx(k, 0);
  std::vector<double> y(k);
  KahanSumC acc;
  while (true) {
    double w = 1.0;
    for (int i = 0; i < k; ++i) {
      const double h = 0.5 * (hi[i] - lo[i]);
      y[i] = lo[i] + h * (1.0 + nodes[idx[i]]);
      w *= h * weights[idx[i]];
    }
    acc.add(w * f(y));
    int axis = k - 1;
    while (axis >= 0) {
      if (++idx[axis] < order) break;
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return acc.value();
}

void evaluate_panel(const BoxFn& f, Panel& p) {
  const cplx hi = tensor_gl(f, p.lo, p.hi, kOrderHi);
  const cplx lo = tensor_gl(f, p.lo, p.hi, kOrderLo);
  p.value = hi;
  p.error = std::abs(hi - lo);
}

int longest_axis(const Panel& p) {
  int axis = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < p.lo.size(); ++i) {
    const double len = p.hi[i] - p.lo[i];
    if (len > best) {
      best = len;
      axis = static_cast<int>(i);
    }
  }
  return axis;
}

QuadratureResult run_adaptive(const BoxFn& f, std::vector<Panel> initial, double tol,
                              std::int64_t maxPanels) {
  auto cmp = [](const Panel& a, const Panel& b) { return a.error < b.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  std::int64_t panels = 0;
  for (auto& p : initial) {
    evaluate_panel(f, p);
    ++panels;
    heap.push(std::move(p));
  }
  double errSum = 0.0;
  {
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> tmp(heap);
    while (!tmp.empty()) {
      errSum += tmp.top().error;
      tmp.pop();
    }
  }
  while (errSum > tol && panels < maxPanels && !heap.empty()) {
    Panel worst = heap.top();
    heap.pop();
    if (worst.error <= 0.0) {
      heap.push(std::move(worst));
      break;
    }
    errSum -= worst.error;
    const int axis = longest_axis(worst);
    const double mid = 0.5 * (worst.lo[axis] + worst.hi[axis]);
    Panel left = worst, right = worst;
    left.hi[axis] = mid;
    right.lo[axis] = mid;
    evaluate_panel(f, left);
    evaluate_panel(f, right);
    panels += 2;
    errSum += left.error + right.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }
  QuadratureResult out;
  KahanSumC acc;
  while (!heap.empty()) {
    acc.add(heap.top().value);
    heap.pop();
  }
  out.value = acc.value();
  out.errorEstimate = errSum;
  out.panels = panels;
  out.converged = errSum <= tol;
  return out;
}

}  // namespace

QuadratureResult integrate_box(const BoxFn& f, const std::vector<double>& lo,
                               const std::vector<double>& hi, double tol,
                               std::int64_t maxPanels) {
  if (lo.empty() || lo.size() != hi.size() || lo.size() > 3)
    throw std::invalid_argument("quadrature: box dimension must be 1..3");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) throw std::invalid_argument("quadrature: empty box");
  std::vector<Panel> init(1);
  init[0].lo = lo;
  init[0].hi = hi;
  return run_adaptive(f, std::move(init), tol, maxPanels);
}

namespace {

// sampled max - min of the phase over a coarse grid (5 points per axis)
double phase_span(const PhaseFn& phase, const std::vector<double>& lo,
                  const std::vector<double>& hi) {
  const int k = static_cast<int>(lo.size());
  const int m = 5;
  std::vector<int> idx(k, 0);
  std::vector<double> y(k);
  double mn = 0.0, mx = 0.0;
  bool first = true;
  while (true) {
    for (int i = 0; i < k; ++i)
      y[i] = lo[i] + (hi[i] - lo[i]) * idx[i] / static_cast<double>(m - 1);
    const double v = phase(y);
    if (first) {
      mn = mx = v;
      first = false;
    } else {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    int axis = k - 1;
    while (axis >= 0) {
      if (++idx[axis] < m) break;
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return mx - mn;
}

}  // namespace

QuadratureResult integrate_oscillatory(const PhaseFn& phase, const std::vector<double>& lo,
                                       const std::vector<double>& hi, double tol,
                                       std::int64_t maxPanels) {
  if (lo.empty() || lo.size() != hi.size() || lo.size() > 3)
    throw std::invalid_argument("quadrature: box dimension must be 1..3");
  BoxFn f = [&phase](const std::vector<double>& y) { return unit_phase(phase(y) / kTwoPi); };
  // pre-split until sampled phase variation (x2 safety) is below pi/4
  std::vector<Panel> ready;
  std::vector<Panel> work(1);
  work[0].lo = lo;
  work[0].hi = hi;
  std::int64_t splits = 0;
  while (!work.empty()) {
    Panel p = std::move(work.back());
    work.pop_back();
    if (2.0 * phase_span(phase, p.lo, p.hi) <= kPi / 4.0 ||
        splits + static_cast<std::int64_t>(ready.size()) >= maxPanels) {
      ready.push_back(std::move(p));
      continue;
    }
    const int axis = longest_axis(p);
    const double mid = 0.5 * (p.lo[axis] + p.hi[axis]);
    Panel left = p, right = p;
    left.hi[axis] = mid;
    right.lo[axis] = mid;
    ++splits;
    work.push_back(std::move(left));
    work.push_back(std::move(right));
  }
  return run_adaptive(f, std::move(ready), tol, maxPanels);
}

QuadratureResult annulus_integral(const BoxFn& f, int k, double a, double b, double tol,
                                  std::int64_t maxPanels) {
  if (k < 1 || k > 3) throw std::invalid_argument("quadrature: annulus dimension must be 1..3");
  if (!(0.0 < a && a < b)) throw std::invalid_argument("quadrature: annulus needs 0 < a < b");
  if (k == 1) {
    BoxFn g = [&f](const std::vector<double>& y) {
      return f({y[0]}) + f({-y[0]});
    };
    return integrate_box(g, {a}, {b}, tol, maxPanels);
  }
  if (k == 2) {
    BoxFn g = [&f](const std::vector<double>& y) {
      const double r = y[0], th = y[1];
      return r * f({r * std::cos(th), r * std::sin(th)});
    };
    return integrate_box(g, {a, 0.0}, {b, kTwoPi}, tol, maxPanels);
  }
  BoxFn g = [&f](const std::vector<double>& y) {
    const double r = y[0], th = y[1], ph = y[2];
    const double sp = std::sin(ph);
    return r * r * sp * f({r * sp * std::cos(th), r * sp * std::sin(th), r * std::cos(ph)});
  };
  return integrate_box(g, {a, 0.0, 0.0}, {b, kTwoPi, kPi}, tol, maxPanels);
}

}  // namespace radon
