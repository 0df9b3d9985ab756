#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace surfcoh {

// Deterministic sample stream.  mt19937_64 output is pinned by the standard;
// values are derived without std distributions, whose sequences are
// implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  // Independent stream for a named sub-task of a run.
  static SeededRng for_task(std::uint64_t seed, std::uint64_t task) {
    return SeededRng(seed * 0x9e3779b97f4a7c15ULL + task + 1);
  }

  std::uint64_t next() { return eng_(); }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long int_in(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("SeededRng::int_in: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  Rational small_rational(long lo = -3, long hi = 3) {
    return Rational(int_in(lo, hi));
  }

  RationalVector small_vector(std::size_t n, long lo = -3, long hi = 3) {
    RationalVector v(n);
    for (auto& x : v) x = small_rational(lo, hi);
    return v;
  }

  RationalVector nonzero_small_vector(std::size_t n, long lo = -3, long hi = 3) {
    for (;;) {
      RationalVector v = small_vector(n, lo, hi);
      if (!is_zero_vector(v)) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace surfcoh
