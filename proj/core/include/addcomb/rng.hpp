#pragma once

#include <cstdint>
#include <random>

namespace addcomb {

/// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
/// is fixed by the standard) and derives doubles and bounded integers without
/// going through std::*_distribution, which is implementation-defined.
/// Identical seeds therefore produce identical streams on every platform.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace addcomb
