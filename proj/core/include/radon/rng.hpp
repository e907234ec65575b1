#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "radon/numeric.hpp"

namespace radon {

// Splittable counter-based generator: the splitmix64 finalizer applied to a
// keyed running counter.  Streams derived via split() are independent of the
// parent's draw position, so experiments stay reproducible regardless of
// evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ kGolden)) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(key_ + kGolden * ++counter_); }

  CounterRng split(std::uint64_t tag) const {
    CounterRng r(0);
    r.key_ = mix(key_ ^ mix(tag ^ 0x5851f42d4c957f2dull));
    r.counter_ = 0;
    return r;
  }

  CounterRng split(std::string_view label) const {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (char ch : label) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ull;
    }
    return split(h);
  }

  // uniform in [0, 1)
  double next_real() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

  // uniform integer in [lo, hi], inclusive
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("CounterRng::next_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  // complex uniform in the square [-amp, amp]^2
  cplx next_complex(double amp = 1.0) {
    double re = amp * (2.0 * next_real() - 1.0);
    double im = amp * (2.0 * next_real() - 1.0);
    return {re, im};
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace radon
