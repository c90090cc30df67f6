// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_RNG_HPP
#define TOWERLRC_RNG_HPP

#include <cstdint>
#include <random>

namespace towerlrc {

/// Seeded trial generator. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; bounded draws use rejection
/// sampling on raw engine output instead of std::uniform_int_distribution
/// (whose algorithm is implementation-defined) so trials replay exactly
/// across standard libraries and languages.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 42;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace towerlrc

#endif  // TOWERLRC_RNG_HPP
