#pragma once

#include <cstdint>
#include <random>

namespace hadring {

/// Seeded generator used by every sampler in the library.
///
/// A stream is identified by (seed, stream index); each trial of a campaign
/// uses its own stream so that results do not depend on how trials are
/// scheduled. The engine is std::mt19937_64, whose output sequence is fixed
/// by the standard, and only raw engine output is consumed (no
/// implementation-defined distributions), so draws are reproducible across
/// platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform value with the low `n` bits random (n <= 64).
  std::uint64_t bits(unsigned n) {
    if (n == 0) return 0;
    const std::uint64_t v = engine_();
    return n >= 64 ? v : (v & ((std::uint64_t{1} << n) - 1));
  }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hadring
