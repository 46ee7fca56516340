#pragma once

#include <cstdint>
#include <vector>

#include "bke/bigint.hpp"

namespace bke {

/// Seedable deterministic randomness source (Mersenne Twister state from
/// GMP). Every key, scalar and nonce in the library is drawn through one
/// of these, so a fixed seed reproduces a run bit for bit. Not hardened
/// for adversarial settings; this is a protocol study tool.
class Rng {
 public:
  /// Entropy-seeded.
  Rng();
  explicit Rng(uint64_t seed);

  /// Uniform in [0, bound), bound > 0.
  Bigint below(const Bigint& bound);
  /// Uniform in [lo, hi), lo < hi.
  Bigint range(const Bigint& lo, const Bigint& hi);
  /// Uniform in [0, 2^nbits).
  Bigint bits(unsigned nbits);
  uint64_t u64();
  std::vector<uint8_t> bytes(size_t n);

  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;

 private:
  gmp_randclass state_;
};

}  // namespace bke
