#include "radon/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace radon {

PolynomialMapping PolynomialMapping::canonical(const MultiIndexSet& g) {
  PolynomialMapping p;
  p.k = g.k;
  p.d0 = g.dim();
  p.terms.resize(p.d0);
  for (int j = 0; j < p.d0; ++j) p.terms[j].push_back({g.gammas[j], 1});
  return p;
}

PolynomialMapping PolynomialMapping::one_dim(const std::vector<std::vector<std::int64_t>>& powerCoeffs) {
  PolynomialMapping p;
  p.k = 1;
  p.d0 = static_cast<int>(powerCoeffs.size());
  p.terms.resize(p.d0);
  for (int j = 0; j < p.d0; ++j)
    for (std::size_t i = 0; i < powerCoeffs[j].size(); ++i)
      if (powerCoeffs[j][i] != 0)
        p.terms[j].push_back({MultiIndex{static_cast<int>(i) + 1}, powerCoeffs[j][i]});
  return p;
}

int PolynomialMapping::max_total_degree() const {
  int deg = 0;
  for (const auto& comp : terms)
    for (const auto& [gamma, c] : comp) {
      int s = 0;
      for (int gi : gamma) s += gi;
      deg = std::max(deg, s);
    }
  return deg;
}

void PolynomialMapping::validate() const {
  if (k < 1 || d0 < 1) throw std::invalid_argument("PolynomialMapping: k, d0 must be >= 1");
  if (static_cast<int>(terms.size()) != d0)
    throw std::invalid_argument("PolynomialMapping: terms size != d0");
  for (const auto& comp : terms)
    for (const auto& [gamma, c] : comp) {
      if (static_cast<int>(gamma.size()) != k)
        throw std::invalid_argument("PolynomialMapping: multi-index dimension mismatch");
      int s = 0;
      for (int gi : gamma) {
        if (gi < 0) throw std::invalid_argument("PolynomialMapping: negative exponent");
        s += gi;
      }
      if (s == 0) throw std::invalid_argument("PolynomialMapping: constant term not allowed");
    }
}

std::vector<BigInt> PolynomialMapping::eval_big(const std::vector<std::int64_t>& y) const {
  if (static_cast<int>(y.size()) != k)
    throw std::invalid_argument("PolynomialMapping::eval: dimension mismatch");
  std::vector<BigInt> out(d0, 0);
  for (int j = 0; j < d0; ++j)
    for (const auto& [gamma, c] : terms[j]) {
      BigInt m = c;
      for (int i = 0; i < k; ++i)
        for (int e = 0; e < gamma[i]; ++e) m *= y[i];
      out[j] += m;
    }
  return out;
}

std::vector<std::int64_t> PolynomialMapping::eval(const std::vector<std::int64_t>& y) const {
  auto big = eval_big(y);
  std::vector<std::int64_t> out;
  out.reserve(big.size());
  for (const auto& v : big) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("PolynomialMapping::eval: component exceeds int64 range");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

Lifting lift(const PolynomialMapping& P) {
  P.validate();
  int N0 = std::max(1, P.max_total_degree());
  Lifting lf;
  lf.gamma = build_gamma(P.k, N0);
  std::map<MultiIndex, int> pos;
  for (int i = 0; i < lf.gamma.dim(); ++i) pos[lf.gamma.gammas[i]] = i;
  lf.L.assign(P.d0, std::vector<std::int64_t>(lf.gamma.dim(), 0));
  for (int j = 0; j < P.d0; ++j)
    for (const auto& [gamma, c] : P.terms[j]) {
      auto it = pos.find(gamma);
      if (it == pos.end()) throw std::logic_error("lift: monomial outside Gamma box");
      lf.L[j][it->second] += c;
    }
  return lf;
}

std::vector<BigInt> apply_linear(const std::vector<std::vector<std::int64_t>>& L,
                                 const std::vector<BigInt>& v) {
  std::vector<BigInt> out(L.size(), 0);
  for (std::size_t j = 0; j < L.size(); ++j) {
    if (L[j].size() != v.size()) throw std::invalid_argument("apply_linear: dimension mismatch");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (L[j][i] != 0) out[j] += BigInt(L[j][i]) * v[i];
  }
  return out;
}

}  // namespace radon
