#include "radon/operators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "radon/parallel.hpp"

namespace radon {

std::string operator_kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::average: return "avg";
    case OperatorKind::truncated: return "trunc";
    case OperatorKind::dyadicSum: return "dyadic";
  }
  return "?";
}

OperatorKind parse_operator_kind(const std::string& name) {
  if (name == "avg") return OperatorKind::average;
  if (name == "trunc") return OperatorKind::truncated;
  if (name == "dyadic") return OperatorKind::dyadicSum;
  throw std::invalid_argument("operators: unknown kind '" + name + "'");
}

namespace {

// image of the summation window in y-lexicographic order, with weights
struct Stencil {
  std::vector<Point> image;
  std::vector<cplx> weight;   // empty => uniform weight handled by caller
};

Stencil average_stencil(const PolynomialMapping& P, std::int64_t N) {
  Stencil st;
  const int k = P.k;
  double budget = 1.0;
  for (int i = 0; i < k; ++i) budget *= static_cast<double>(N);
  if (budget > 4e6) throw std::invalid_argument("operators: N^k summation budget exceeded");
  std::vector<std::int64_t> y(k, 1);
  while (true) {
    st.image.push_back(P.eval(y));
    int axis = k - 1;
    while (axis >= 0) {
      if (++y[axis] <= N) break;
      y[axis] = 1;
      --axis;
    }
    if (axis < 0) break;
  }
  return st;
}

Stencil window_stencil(const PolynomialMapping& P, std::int64_t N,
                       const std::function<cplx(const std::vector<double>&)>& w) {
  Stencil st;
  const int k = P.k;
  double budget = 1.0;
  for (int i = 0; i < k; ++i) budget *= static_cast<double>(2 * N + 1);
  if (budget > 4e6) throw std::invalid_argument("operators: (2N+1)^k summation budget exceeded");
  std::vector<std::int64_t> y(k, -N);
  std::vector<double> yd(k);
  while (true) {
    bool zero = true;
    for (int i = 0; i < k; ++i) zero = zero && y[i] == 0;
    if (!zero) {
      for (int i = 0; i < k; ++i) yd[i] = static_cast<double>(y[i]);
      const cplx wv = w(yd);
      if (wv != cplx(0.0, 0.0)) {
        st.image.push_back(P.eval(y));
        st.weight.push_back(wv);
      }
    }
    int axis = k - 1;
    while (axis >= 0) {
      if (++y[axis] <= N) break;
      y[axis] = -N;
      --axis;
    }
    if (axis < 0) break;
  }
  return st;
}

std::vector<Point> candidate_points(const LatticeFunction& f, const Stencil& st) {
  std::set<Point> cand;
  for (const auto& [x0, v] : f.values())
    for (const auto& py : st.image) {
      Point x(x0.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = x0[i] + py[i];
      cand.insert(std::move(x));
    }
  return {cand.begin(), cand.end()};
}

// g(x) = sum_i f(x - image[i]) * weight[i], summed in stencil (y-lex) order
LatticeFunction gather(const LatticeFunction& f, const Stencil& st, const cplx* uniformScale) {
  const auto cand = candidate_points(f, st);
  LatticeFunction g(f.dim());
  std::vector<cplx> vals(cand.size());
  block_reduce<int>(
      cand.size(), 64, 0,
      [&](std::size_t lo, std::size_t hi) {
        Point arg;
        for (std::size_t c = lo; c < hi; ++c) {
          const Point& x = cand[c];
          arg.assign(x.size(), 0);
          cplx acc(0.0, 0.0);
          for (std::size_t i = 0; i < st.image.size(); ++i) {
            const Point& py = st.image[i];
            for (std::size_t t = 0; t < arg.size(); ++t) arg[t] = x[t] - py[t];
            const cplx fv = f.at(arg);
            if (fv == cplx(0.0, 0.0)) continue;
            acc += st.weight.empty() ? fv : fv * st.weight[i];
          }
          vals[c] = acc;
        }
        return 0;
      },
      [](int a, int) { return a; });
  for (std::size_t c = 0; c < cand.size(); ++c) {
    cplx v = vals[c];
    if (uniformScale) v *= *uniformScale;
    g.set(cand[c], v);
  }
  return g;
}

void check_dims(const LatticeFunction& f, const PolynomialMapping& P) {
  if (f.dim() != P.d0) throw std::invalid_argument("operators: f dimension != mapping range");
}

}  // namespace

OperatorResult apply_average(const LatticeFunction& f, const PolynomialMapping& P,
                             std::int64_t N) {
  if (N < 1) throw std::invalid_argument("operators: N must be positive");
  check_dims(f, P);
  const auto st = average_stencil(P, N);
  double nk = 1.0;
  for (int i = 0; i < P.k; ++i) nk *= static_cast<double>(N);
  const cplx scale(1.0 / nk, 0.0);
  OperatorResult out;
  out.g = gather(f, st, &scale);
  out.kind = OperatorKind::average;
  out.N = N;
  return out;
}

OperatorResult apply_truncated(const LatticeFunction& f, const PolynomialMapping& P,
                               const CZKernel& K, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("operators: N must be positive");
  check_dims(f, P);
  if (K.k != P.k) throw std::invalid_argument("operators: kernel dimension != mapping domain");
  const auto st = window_stencil(P, N, K.eval);
  OperatorResult out;
  out.g = gather(f, st, nullptr);
  out.kind = OperatorKind::truncated;
  out.N = N;
  return out;
}

OperatorResult apply_dyadic_singular_sum(const LatticeFunction& f, const PolynomialMapping& P,
                                         const std::vector<DyadicKernelPiece>& pieces, int n) {
  check_dims(f, P);
  if (n < 0 || n >= static_cast<int>(pieces.size()))
    throw std::invalid_argument("operators: n exceeds available pieces");
  for (int j = 0; j <= n; ++j)
    if (pieces[j].j != j) throw std::invalid_argument("operators: pieces must cover j = 0..n");
  const std::int64_t R = static_cast<std::int64_t>(1) << n;  // pieces vanish for |y| > 2^n
  auto w = [&pieces, n](const std::vector<double>& yd) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j <= n; ++j) acc += pieces[j].eval(yd);
    return acc;
  };
  const auto st = window_stencil(P, R, w);
  OperatorResult out;
  out.g = gather(f, st, nullptr);
  out.kind = OperatorKind::dyadicSum;
  out.N = R;
  return out;
}

namespace {

int exact_log2(std::int64_t N) {
  if (N < 1 || (N & (N - 1)) != 0)
    throw std::invalid_argument("operators: dyadic-sum grid values must be powers of two");
  int n = 0;
  while ((static_cast<std::int64_t>(1) << n) < N) ++n;
  return n;
}

}  // namespace

LatticeFunction maximal(const LatticeFunction& f, const PolynomialMapping& P, OperatorKind kind,
                        const std::vector<std::int64_t>& grid, const CZKernel* K,
                        const std::vector<DyadicKernelPiece>* pieces) {
  if (grid.empty()) throw std::invalid_argument("operators: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw std::invalid_argument("operators: grid must ascend");
  if (kind == OperatorKind::truncated && !K)
    throw std::invalid_argument("operators: truncated maximal needs a kernel");
  if (kind == OperatorKind::dyadicSum && !pieces)
    throw std::invalid_argument("operators: dyadic maximal needs pieces");
  auto apply_one = [&](std::int64_t N) {
    switch (kind) {
      case OperatorKind::average: return apply_average(f, P, N);
      case OperatorKind::truncated: return apply_truncated(f, P, *K, N);
      case OperatorKind::dyadicSum:
        return apply_dyadic_singular_sum(f, P, *pieces, exact_log2(N));
    }
    throw std::logic_error("operators: bad kind");
  };
  LatticeFunction out = block_reduce<LatticeFunction>(
      grid.size(), 1, LatticeFunction(f.dim()),
      [&](std::size_t lo, std::size_t hi) {
        LatticeFunction acc(f.dim());
        for (std::size_t i = lo; i < hi; ++i)
          acc = pointwise_sup_abs(acc, apply_one(grid[i]).g);
        return acc;
      },
      [](const LatticeFunction& acc, const LatticeFunction& part) {
        return pointwise_sup_abs(acc, part);
      });
  return out;
}

std::vector<std::int64_t> dyadic_grid(int nmax) {
  if (nmax < 0) throw std::invalid_argument("operators: nmax must be >= 0");
  std::vector<std::int64_t> g;
  for (int n = 0; n <= nmax; ++n) g.push_back(static_cast<std::int64_t>(1) << n);
  return g;
}

std::vector<std::int64_t> parse_grid(const std::string& spec) {
  if (spec.rfind("dyadic:", 0) == 0) {
    std::size_t pos = 0;
    const int nmax = std::stoi(spec.substr(7), &pos);
    if (pos != spec.size() - 7) throw std::invalid_argument("operators: bad grid spec");
    return dyadic_grid(nmax);
  }
  std::vector<std::int64_t> g;
  std::size_t i = 0;
  while (i < spec.size()) {
    auto comma = spec.find(',', i);
    if (comma == std::string::npos) comma = spec.size();
    const std::string tok = spec.substr(i, comma - i);
    std::size_t pos = 0;
    g.push_back(std::stoll(tok, &pos));
    if (pos != tok.size()) throw std::invalid_argument("operators: bad grid entry '" + tok + "'");
    i = comma + 1;
  }
  if (g.empty()) throw std::invalid_argument("operators: empty grid spec");
  return g;
}

NormRatioReport norm_ratio_experiment(const FunctionFamily& family, const PolynomialMapping& P,
                                      OperatorKind kind, double p,
                                      const std::vector<std::int64_t>& grid,
                                      const CZKernel* K,
                                      const std::vector<DyadicKernelPiece>* pieces) {
  if (family.members.empty()) throw std::invalid_argument("operators: empty family");
  if (!(p > 1.0)) throw std::invalid_argument("operators: p must lie in (1, inf)");
  NormRatioReport rep;
  rep.denominator = lp_l2_norm(family, p);
  if (rep.denominator == 0.0) throw std::invalid_argument("operators: zero denominator");
  FunctionFamily sup;
  for (const auto& f : family.members)
    sup.members.push_back(maximal(f, P, kind, grid, K, pieces));
  rep.numerator = lp_l2_norm(sup, p);
  rep.ratio = rep.numerator / rep.denominator;
  for (std::int64_t N : grid) {
    FunctionFamily single;
    for (const auto& f : family.members) {
      std::vector<std::int64_t> g1{N};
      single.members.push_back(maximal(f, P, kind, g1, K, pieces));
    }
    rep.perN.emplace_back(N, lp_l2_norm(single, p));
  }
  return rep;
}

}  // namespace radon
