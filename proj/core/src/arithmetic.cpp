#include "radon/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "radon/kernels.hpp"
#include "radon/numeric.hpp"
#include "radon/rng.hpp"

namespace radon {

namespace {

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (comp[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t m = p * p; m <= n; m += p) comp[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

BigInt factorial_big(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool DenominatorSet::contains(const BigInt& q) const {
  if (q < 1) return false;
  BigInt rest = q;
  int distinct = 0;
  for (std::int64_t p : primesWindow) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > D) return false;
    if (++distinct > D) return false;
  }
  return Q0 % rest == 0;
}

std::vector<BigInt> DenominatorSet::all_members(std::size_t maxCount) const {
  // divisors of Q0 from the factorization of (N0!)^D
  std::vector<std::pair<std::int64_t, std::int64_t>> fac;  // (p, D * e_p(N0!))
  for (std::int64_t p : primes_up_to(N0)) {
    std::int64_t e = 0;
    for (std::int64_t pk = p; pk <= N0; pk *= p) e += N0 / pk;
    fac.emplace_back(p, static_cast<std::int64_t>(D) * e);
  }
  std::size_t divCount = 1;
  for (auto& [p, e] : fac) {
    divCount *= static_cast<std::size_t>(e) + 1;
    if (divCount > maxCount) throw std::runtime_error("DenominatorSet: member enumeration exceeds guard");
  }
  std::vector<BigInt> divisors;
  divisors.reserve(divCount);
  divisors.push_back(1);
  for (auto& [p, e] : fac) {
    std::size_t base = divisors.size();
    BigInt pk = 1;
    for (std::int64_t i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t s = 0; s < base; ++s) divisors.push_back(divisors[s] * pk);
    }
  }

  // window parts: products of <= D distinct window primes at exponents 1..D
  std::vector<BigInt> winParts{1};
  const int nw = static_cast<int>(primesWindow.size());
  // depth-first over (prime subset, exponents)
  std::function<void(int, int, BigInt)> rec = [&](int start, int used, BigInt cur) {
    if (used == D) return;
    for (int i = start; i < nw; ++i) {
      BigInt pk = cur;
      for (int e = 1; e <= D; ++e) {
        pk *= primesWindow[static_cast<std::size_t>(i)];
        winParts.push_back(pk);
        if (divCount * winParts.size() > maxCount)
          throw std::runtime_error("DenominatorSet: member enumeration exceeds guard");
        rec(i + 1, used + 1, pk);
      }
    }
  };
  rec(0, 0, 1);

  std::vector<BigInt> members;
  members.reserve(divisors.size() * winParts.size());
  for (const BigInt& w : winParts)
    for (const BigInt& Q : divisors) members.push_back(Q * w);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

DenominatorSet build_denominator_set(std::int64_t N, double rho) {
  if (N < 1) throw std::invalid_argument("build_denominator_set: N >= 1 required");
  if (!(rho > 0.0)) throw std::invalid_argument("build_denominator_set: rho > 0 required");
  DenominatorSet S;
  S.N = N;
  S.rho = rho;
  long double p = std::pow(static_cast<long double>(N), static_cast<long double>(rho) / 2.0L);
  S.N0 = static_cast<std::int64_t>(std::floor(p + 1e-9L)) + 1;
  if (S.N0 > 60) throw std::invalid_argument("build_denominator_set: desk guard N0 <= 60 exceeded");
  if (N > 2000000) throw std::invalid_argument("build_denominator_set: prime window sieve guard exceeded");
  S.D = static_cast<int>(std::floor(2.0 / rho + 1e-12)) + 1;
  S.Q0 = factorial_big(S.N0);
  BigInt q0 = 1;
  for (int i = 0; i < S.D; ++i) q0 *= S.Q0;
  S.Q0 = q0;
  for (std::int64_t pr : primes_up_to(N))
    if (pr > S.N0) S.primesWindow.push_back(pr);
  return S;
}

DenominatorSet::Factorization unique_factorization(const BigInt& q, const DenominatorSet& S) {
  if (q < 1) throw std::invalid_argument("unique_factorization: q >= 1 required");
  BigInt rest = q;
  BigInt w = 1;
  int distinct = 0;
  for (std::int64_t p : S.primesWindow) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      w *= p;
      ++e;
    }
    if (e > S.D || ++distinct > S.D)
      throw std::invalid_argument("unique_factorization: q is not in the denominator set");
  }
  if (S.Q0 % rest != 0)
    throw std::invalid_argument("unique_factorization: q is not in the denominator set");
  return {rest, w};
}

RationalSet build_rational_set(const std::vector<std::int64_t>& denoms,
                               const MultiIndexSet& gamma) {
  const int d = gamma.dim();
  RationalSet out;
  out.d = d;
  std::vector<std::int64_t> qs = denoms;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  double budget = 0.0;
  for (std::int64_t q : qs) {
    if (q < 1) throw std::invalid_argument("build_rational_set: denominators must be >= 1");
    budget += std::pow(static_cast<double>(q), d);
    if (budget > 2e7) throw std::runtime_error("build_rational_set: enumeration budget exceeded");
  }
  for (std::int64_t q : qs) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(d), 1);
    while (true) {
      RationalPoint pt(a, q);
      if (pt.in_Aq()) out.points.push_back(pt);
      int c = d - 1;
      while (c >= 0 && a[static_cast<std::size_t>(c)] == q) {
        a[static_cast<std::size_t>(c)] = 1;
        --c;
      }
      if (c < 0) break;
      ++a[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

namespace {

double binomial_approx(std::int64_t n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  return b;
}

// all k-element index subsets of {0..n-1}
std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
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

bool separates(const std::vector<int>& labels, const std::vector<int>& subset, int k,
               std::vector<char>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  int hit = 0;
  for (int idx : subset) {
    char& s = scratch[static_cast<std::size_t>(labels[static_cast<std::size_t>(idx)])];
    if (!s) {
      s = 1;
      ++hit;
    }
  }
  return hit == k;
}

}  // namespace

PartitionFamily partition_family(std::int64_t N, int k, std::uint64_t seed) {
  if (k < 1 || N < k) throw std::invalid_argument("partition_family: need 1 <= k <= N");
  PartitionFamily fam;
  fam.N = N;
  fam.k = k;
  double kpow = std::pow(static_cast<double>(k), k + 1);
  double kfac = 1.0;
  for (int i = 2; i <= k; ++i) kfac *= i;
  fam.rBound = static_cast<std::int64_t>(
                   std::ceil(kpow / kfac * std::log(std::exp(1.0) * static_cast<double>(N) /
                                                    static_cast<double>(k)))) +
               1;

  const std::size_t n = static_cast<std::size_t>(N);
  if (k == 1) {
    fam.partitions.push_back(std::vector<int>(n, 0));
    return fam;
  }
  if (k == static_cast<int>(N)) {
    std::vector<int> singletons(n);
    std::iota(singletons.begin(), singletons.end(), 0);
    fam.partitions.push_back(singletons);
    return fam;
  }
  if (binomial_approx(N, k) > 1e6)
    throw std::invalid_argument("partition_family: exhaustive verification guard C(N,k) <= 1e6 exceeded");

  auto subsets = all_subsets(static_cast<int>(N), k);
  CounterRng root(seed);
  const int maxAttempts = 200;
  for (int attempt = 0; attempt < maxAttempts; ++attempt) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(attempt));
    std::vector<std::vector<int>> members;
    std::vector<std::vector<int>> uncovered = subsets;
    std::vector<char> scratch(static_cast<std::size_t>(k), 0);
    while (static_cast<std::int64_t>(members.size()) < fam.rBound && !uncovered.empty()) {
      // random surjection: a k-prefix of a random permutation pins one element
      // per label, the rest draw uniformly
      std::vector<int> labels(n);
      for (std::size_t i = 0; i < n; ++i)
        labels[i] = static_cast<int>(rng.next_int(0, k - 1));
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = static_cast<std::size_t>(rng.next_int(static_cast<std::int64_t>(i),
                                                              static_cast<std::int64_t>(n) - 1));
        std::swap(perm[i], perm[j]);
      }
      for (int m = 0; m < k; ++m) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(m)])] = m;

      std::vector<std::vector<int>> still;
      still.reserve(uncovered.size());
      for (const auto& E : uncovered)
        if (!separates(labels, E, k, scratch)) still.push_back(E);
      if (still.size() < uncovered.size()) {
        members.push_back(std::move(labels));
        uncovered = std::move(still);
      }
    }
    if (uncovered.empty()) {
      fam.partitions = std::move(members);
      return fam;
    }
  }
  std::ostringstream msg;
  msg << "partition_family: covering not reached after " << maxAttempts << " seeded attempts (N="
      << N << ", k=" << k << ", r=" << fam.rBound << ")";
  throw std::runtime_error(msg.str());
}

namespace {

struct Factored {
  std::vector<std::int64_t> primes;
  std::vector<int> exps;
};

Factored factor_member(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("o_property_check: members must be positive");
  if (m > static_cast<std::int64_t>(1e12))
    throw std::invalid_argument("o_property_check: factorization overflow (member > 1e12)");
  Factored f;
  std::int64_t rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.primes.push_back(p);
    f.exps.push_back(e);
  }
  if (rest > 1) {
    f.primes.push_back(rest);
    f.exps.push_back(1);
  }
  return f;
}

bool color_class(const std::vector<std::int64_t>& verts,
                 const std::vector<std::set<std::int64_t>>& cliques, int colors,
                 std::map<std::int64_t, int>& colorOf) {
  // proper coloring of the co-occurrence graph; members are cliques
  std::map<std::int64_t, std::set<std::int64_t>> adj;
  for (std::int64_t v : verts) adj[v];
  for (const auto& c : cliques)
    for (std::int64_t u : c)
      for (std::int64_t v : c)
        if (u != v) adj[u].insert(v);
  std::vector<std::int64_t> order = verts;
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return a < b;
  });
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) return true;
    std::int64_t v = order[i];
    for (int c = 0; c < colors; ++c) {
      bool ok = true;
      for (std::int64_t u : adj[v]) {
        auto it = colorOf.find(u);
        if (it != colorOf.end() && it->second == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colorOf[v] = c;
      if (rec(i + 1)) return true;
      colorOf.erase(v);
    }
    return false;
  };
  return rec(0);
}

}  // namespace

OPropertyCheck o_property_check(const std::vector<std::int64_t>& lambda, int D) {
  OPropertyCheck res;
  res.family.lambda = lambda;
  std::vector<std::int64_t> mem = lambda;
  std::sort(mem.begin(), mem.end());
  mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
  res.family.lambda = mem;
  if (mem.empty() || (mem.size() == 1 && mem[0] == 1)) {
    res.ok = true;  // Lambda = {1}: k = 0 by convention
    res.family.k = 0;
    return res;
  }

  std::vector<Factored> fac;
  fac.reserve(mem.size());
  for (std::int64_t m : mem) fac.push_back(factor_member(m));

  const std::size_t k = fac[0].primes.size();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    if (fac[i].primes.size() != k) {
      std::ostringstream msg;
      msg << "members " << mem[0] << " and " << mem[i] << " have different prime-factor counts ("
          << k << " vs " << fac[i].primes.size() << ")";
      res.refutation = msg.str();
      return res;
    }
  }
  if (k > static_cast<std::size_t>(D)) {
    std::ostringstream msg;
    msg << "members have " << k << " prime factors, exceeding D=" << D;
    res.refutation = msg.str();
    return res;
  }

  auto exp_multiset = [](const Factored& f) {
    std::vector<int> e = f.exps;
    std::sort(e.begin(), e.end());
    return e;
  };
  const std::vector<int> exps0 = exp_multiset(fac[0]);
  for (std::size_t i = 0; i < mem.size(); ++i) {
    if (exp_multiset(fac[i]) != exps0) {
      std::ostringstream msg;
      msg << "members " << mem[0] << " and " << mem[i] << " have different exponent multisets";
      res.refutation = msg.str();
      return res;
    }
  }
  for (int e : exps0) {
    if (e > D) {
      std::ostringstream msg;
      msg << "exponent " << e << " exceeds D=" << D;
      res.refutation = msg.str();
      return res;
    }
  }

  // every prime must carry a single exponent across the whole set (otherwise
  // it would need to sit in two slots, breaking pairwise coprimality)
  std::map<std::int64_t, int> expOf;
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t t = 0; t < fac[i].primes.size(); ++t) {
      std::int64_t p = fac[i].primes[t];
      int e = fac[i].exps[t];
      auto [it, inserted] = expOf.emplace(p, e);
      if (!inserted && it->second != e) {
        std::ostringstream msg;
        msg << "prime " << p << " occurs with exponents " << it->second << " and " << e;
        res.refutation = msg.str();
        return res;
      }
    }
  }

  // slots per exponent value; one proper coloring per class
  std::map<int, int> multiplicity;  // exponent value -> slot count
  for (int e : exps0) ++multiplicity[e];
  std::vector<int> slotExp;
  std::vector<std::vector<std::int64_t>> slotPrimes;
  for (auto& [e, nu] : multiplicity) {
    std::vector<std::int64_t> verts;
    for (auto& [p, pe] : expOf)
      if (pe == e) verts.push_back(p);
    std::vector<std::set<std::int64_t>> cliques;
    for (const Factored& f : fac) {
      std::set<std::int64_t> cl;
      for (std::size_t t = 0; t < f.primes.size(); ++t)
        if (f.exps[t] == e) cl.insert(f.primes[t]);
      cliques.push_back(std::move(cl));
    }
    std::map<std::int64_t, int> colorOf;
    if (!color_class(verts, cliques, nu, colorOf)) {
      std::ostringstream msg;
      msg << "no slot assignment for exponent " << e << ": prime co-occurrence graph is not "
          << nu << "-colorable";
      res.refutation = msg.str();
      return res;
    }
    std::size_t base = slotPrimes.size();
    for (int c = 0; c < nu; ++c) {
      slotExp.push_back(e);
      slotPrimes.emplace_back();
    }
    for (auto& [p, c] : colorOf)
      slotPrimes[base + static_cast<std::size_t>(c)].push_back(p);
    for (int c = 0; c < nu; ++c)
      std::sort(slotPrimes[base + static_cast<std::size_t>(c)].begin(),
                slotPrimes[base + static_cast<std::size_t>(c)].end());
  }

  res.ok = true;
  res.family.k = static_cast<int>(k);
  res.family.exponents = std::move(slotExp);
  res.family.slotPrimes = std::move(slotPrimes);
  return res;
}

ODecomposition decompose_o_property(const std::vector<std::int64_t>& primes, int D,
                                    std::int64_t N, std::uint64_t seed) {
  if (D < 1) throw std::invalid_argument("decompose_o_property: D >= 1 required");
  std::vector<std::int64_t> V = primes;
  std::sort(V.begin(), V.end());
  V.erase(std::unique(V.begin(), V.end()), V.end());
  for (std::int64_t p : V) {
    Factored f = factor_member(p);
    if (f.primes.size() != 1 || f.exps[0] != 1)
      throw std::invalid_argument("decompose_o_property: V must consist of primes");
    if (p > N)
      throw std::invalid_argument("decompose_o_property: prime exceeds the window bound N");
  }
  const int nv = static_cast<int>(V.size());

  ODecomposition out;
  std::int64_t rMax = 1;
  for (int k = 1; k <= std::min(D, nv); ++k) {
    PartitionFamily fam = partition_family(nv, k, CounterRng::mix(seed) ^ static_cast<std::uint64_t>(k));
    rMax = std::max(rMax, fam.rBound);

    std::vector<int> gammaTuple(static_cast<std::size_t>(k), 1);
    while (true) {
      for (std::size_t i = 0; i < fam.partitions.size(); ++i) {
        const std::vector<int>& labels = fam.partitions[i];
        std::vector<std::vector<std::int64_t>> parts(static_cast<std::size_t>(k));
        for (int idx = 0; idx < nv; ++idx)
          parts[static_cast<std::size_t>(labels[static_cast<std::size_t>(idx)])].push_back(
              V[static_cast<std::size_t>(idx)]);

        std::set<std::int64_t> made;
        std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
        while (true) {
          std::int64_t w = 1;
          bool overflow = false;
          for (int j = 0; j < k; ++j) {
            std::int64_t p = parts[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]];
            for (int e = 0; e < gammaTuple[static_cast<std::size_t>(j)]; ++e) {
              if (w > static_cast<std::int64_t>(4e18) / p) {
                overflow = true;
                break;
              }
              w *= p;
            }
            if (overflow) break;
          }
          if (overflow) throw std::overflow_error("decompose_o_property: product overflow");
          made.insert(w);
          int c = k - 1;
          while (c >= 0 &&
                 pick[static_cast<std::size_t>(c)] + 1 == parts[static_cast<std::size_t>(c)].size()) {
            pick[static_cast<std::size_t>(c)] = 0;
            --c;
          }
          if (c < 0) break;
          ++pick[static_cast<std::size_t>(c)];
        }

        std::ostringstream label;
        label << "k=" << k << ";gamma=";
        for (int j = 0; j < k; ++j) {
          if (j) label << ",";
          label << gammaTuple[static_cast<std::size_t>(j)];
        }
        label << ";member=" << i;
        out.lambdas.emplace_back(made.begin(), made.end());
        out.labels.push_back(label.str());
      }
      int c = k - 1;
      while (c >= 0 && gammaTuple[static_cast<std::size_t>(c)] == D) {
        gammaTuple[static_cast<std::size_t>(c)] = 1;
        --c;
      }
      if (c < 0) break;
      ++gammaTuple[static_cast<std::size_t>(c)];
    }
  }

  double dPow = std::pow(static_cast<double>(D), D);
  out.familyBound = static_cast<std::int64_t>(static_cast<double>(D) * dPow * static_cast<double>(rMax));
  if (static_cast<std::int64_t>(out.lambdas.size()) > out.familyBound)
    throw std::logic_error("decompose_o_property: emitted family exceeds the stated bound");

  // executable postconditions: every emitted set has the O property, and the
  // union recovers Pi(V) exactly
  for (const auto& lam : out.lambdas) {
    OPropertyCheck chk = o_property_check(lam, D);
    if (!chk.ok)
      throw std::logic_error("decompose_o_property: emitted set fails the O property: " +
                             chk.refutation);
  }
  std::set<std::int64_t> covered;
  for (const auto& lam : out.lambdas) covered.insert(lam.begin(), lam.end());
  std::set<std::int64_t> target;
  double piBound = 0.0;
  for (int k = 1; k <= std::min(D, nv); ++k)
    piBound += binomial_approx(nv, k) * std::pow(static_cast<double>(D), k);
  if (piBound > 1e6) throw std::runtime_error("decompose_o_property: Pi(V) enumeration guard exceeded");
  for (int k = 1; k <= std::min(D, nv); ++k) {
    for (const auto& subset : all_subsets(nv, k)) {
      std::vector<int> exps(static_cast<std::size_t>(k), 1);
      while (true) {
        std::int64_t w = 1;
        for (int j = 0; j < k; ++j)
          for (int e = 0; e < exps[static_cast<std::size_t>(j)]; ++e)
            w *= V[static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])];
        target.insert(w);
        int c = k - 1;
        while (c >= 0 && exps[static_cast<std::size_t>(c)] == D) {
          exps[static_cast<std::size_t>(c)] = 1;
          --c;
        }
        if (c < 0) break;
        ++exps[static_cast<std::size_t>(c)];
      }
    }
  }
  if (covered != target)
    throw std::logic_error("decompose_o_property: union of emitted sets does not equal Pi(V)");
  return out;
}

bool projection_supports_disjoint(const RationalSet& rationals,
                                  const std::vector<double>& epsilons) {
  const int d = rationals.d;
  const double radius = 1.0 / (8.0 * static_cast<double>(d));
  std::vector<TorusPoint> pts;
  pts.reserve(rationals.points.size());
  for (const auto& r : rationals.points) pts.push_back(r.torus());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool separated = false;
      for (int g = 0; g < d; ++g) {
        double dist = std::fabs(torus_reduce(pts[i].x[static_cast<std::size_t>(g)] -
                                             pts[j].x[static_cast<std::size_t>(g)]));
        if (dist > 2.0 * radius * epsilons[static_cast<std::size_t>(g)]) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

double projection_multiplier(const TorusPoint& xi, const RationalSet& rationals,
                             const std::vector<double>& epsilons, const BumpFn& bump,
                             bool* overlap) {
  const int d = rationals.d;
  if (xi.dim() != d || static_cast<int>(epsilons.size()) != d)
    throw std::invalid_argument("projection_multiplier: dimension mismatch");
  for (double e : epsilons)
    if (!(e > 0.0)) throw std::invalid_argument("projection_multiplier: epsilons must be positive");
  if (overlap) *overlap = !projection_supports_disjoint(rationals, epsilons);

  auto eta = [&](double r) {
    if (bump) return bump(r);
    return smooth_step(16.0 * static_cast<double>(d) * r);
  };
  KahanSum total;
  for (const auto& rp : rationals.points) {
    TorusPoint c = rp.torus();
    double s2 = 0.0;
    for (int g = 0; g < d; ++g) {
      double diff = torus_reduce(xi.x[static_cast<std::size_t>(g)] - c.x[static_cast<std::size_t>(g)]) /
                    epsilons[static_cast<std::size_t>(g)];
      s2 += diff * diff;
    }
    total.add(eta(std::sqrt(s2)));
  }
  return total.s;
}

}  // namespace radon
