#include "radon/multiindex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace radon {

std::vector<int> MultiIndexSet::orders() const {
  std::vector<int> o;
  o.reserve(gammas.size());
  for (const auto& g : gammas) {
    int s = 0;
    for (int gi : g) s += gi;
    o.push_back(s);
  }
  return o;
}

MultiIndexSet build_gamma(int k, int N0) {
  if (k < 1) throw std::invalid_argument("build_gamma: k must be >= 1");
  if (N0 < 1) throw std::invalid_argument("build_gamma: N0 must be >= 1");
  MultiIndexSet g;
  g.k = k;
  g.N0 = N0;
  MultiIndex cur(k, 0);
  // odometer enumeration emits lexicographic order directly
  while (true) {
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == N0) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
    g.gammas.push_back(cur);
  }
  std::sort(g.gammas.begin(), g.gammas.end());
  return g;
}

std::vector<BigInt> canonical_eval_big(const MultiIndexSet& g, const std::vector<std::int64_t>& y) {
  if (static_cast<int>(y.size()) != g.k)
    throw std::invalid_argument("canonical_eval: point dimension does not match Gamma");
  // power table per axis
  std::vector<std::vector<BigInt>> pw(g.k);
  for (int i = 0; i < g.k; ++i) {
    pw[i].resize(g.N0 + 1);
    pw[i][0] = 1;
    for (int e = 1; e <= g.N0; ++e) pw[i][e] = pw[i][e - 1] * y[i];
  }
  std::vector<BigInt> out;
  out.reserve(g.gammas.size());
  for (const auto& gamma : g.gammas) {
    BigInt v = 1;
    for (int i = 0; i < g.k; ++i)
      if (gamma[i] != 0) v *= pw[i][gamma[i]];
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> canonical_eval(const MultiIndexSet& g, const std::vector<std::int64_t>& y) {
  auto big = canonical_eval_big(g, y);
  std::vector<std::int64_t> out;
  out.reserve(big.size());
  for (const auto& v : big) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("canonical_eval: component exceeds int64 range");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

std::vector<double> dilate(double t, const std::vector<int>& orders, const std::vector<double>& x) {
  if (!(t > 0.0)) throw std::invalid_argument("dilate: t must be positive");
  if (orders.size() != x.size()) throw std::invalid_argument("dilate: dimension mismatch");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(t, orders[i]) * x[i];
  return out;
}

}  // namespace radon
