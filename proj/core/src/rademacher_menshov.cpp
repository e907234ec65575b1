#include "radon/rademacher_menshov.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace radon {

std::vector<DyadicInterval> dyadic_interval_decomposition(std::int64_t m, std::int64_t n, int s) {
  if (s < 0 || s > 62) throw std::invalid_argument("rm: bad ambient scale");
  const std::int64_t top = static_cast<std::int64_t>(1) << s;
  if (!(0 <= m && m < n && n <= top)) throw std::invalid_argument("rm: need 0 <= m < n <= 2^s");
  std::vector<DyadicInterval> out;
  std::int64_t cur = m;
  while (cur < n) {
    int i = 0;
    while (i < s) {
      const std::int64_t len = static_cast<std::int64_t>(1) << (i + 1);
      if (cur % len != 0 || cur + len > n) break;
      ++i;
    }
    out.push_back({i, cur >> i});
    cur += static_cast<std::int64_t>(1) << i;
  }
  return out;
}

namespace {

int ambient_scale(std::size_t len) {
  for (int s = 0; s <= 30; ++s)
    if ((static_cast<std::size_t>(1) << s) + 1 == len) return s;
  throw std::invalid_argument("rm: length must be 2^s + 1");
}

}  // namespace

double rm_rhs(const std::vector<cplx>& a, std::size_t j0) {
  const int s = ambient_scale(a.size());
  if (j0 >= a.size()) throw std::invalid_argument("rm: j0 out of range");
  double rhs = std::abs(a[j0]);
  for (int i = 0; i <= s; ++i) {
    const std::size_t step = static_cast<std::size_t>(1) << i;
    KahanSum sq;
    for (std::size_t j = 0; (j + 1) * step < a.size(); ++j)
      sq.add(std::norm(a[(j + 1) * step] - a[j * step]));
    rhs += std::sqrt(2.0) * std::sqrt(sq.value());
  }
  return rhs;
}

bool rm_check(const std::vector<cplx>& a, std::size_t j0) {
  double mx = 0.0;
  for (const auto& v : a) mx = std::max(mx, std::abs(v));
  return mx <= rm_rhs(a, j0) + 1e-12;
}

RmFunctionDecomposition rm_function_decomposition(const std::vector<LatticeFunction>& g,
                                                  std::size_t j0) {
  const int s = ambient_scale(g.size());
  if (j0 >= g.size()) throw std::invalid_argument("rm: j0 out of range");
  const int dim = g.front().dim();
  for (const auto& f : g)
    if (f.dim() != dim) throw std::invalid_argument("rm: dimension mismatch");
  std::set<Point> support;
  for (const auto& f : g)
    for (const auto& [p, v] : f.values()) support.insert(p);
  RmFunctionDecomposition out;
  out.base = g[j0];
  for (int i = 0; i <= s; ++i) {
    const std::size_t step = static_cast<std::size_t>(1) << i;
    LatticeFunction sf(dim);
    for (const auto& p : support) {
      KahanSum sq;
      for (std::size_t j = 0; (j + 1) * step < g.size(); ++j)
        sq.add(std::norm(g[(j + 1) * step].at(p) - g[j * step].at(p)));
      sf.set(p, cplx(std::sqrt(sq.value()), 0.0));
    }
    out.squareFunctions.push_back(std::move(sf));
  }
  return out;
}

}  // namespace radon
