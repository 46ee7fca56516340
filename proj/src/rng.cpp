#include "bke/rng.hpp"

#include <random>
#include <stdexcept>

namespace bke {

Rng::Rng() : state_(gmp_randinit_mt) {
  std::random_device rd;
  uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  state_.seed(static_cast<unsigned long>(seed));
}

Rng::Rng(uint64_t seed) : state_(gmp_randinit_mt) {
  state_.seed(static_cast<unsigned long>(seed));
}

Bigint Rng::below(const Bigint& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be > 0");
  return state_.get_z_range(bound);
}

Bigint Rng::range(const Bigint& lo, const Bigint& hi) {
  if (lo >= hi) throw std::invalid_argument("Rng::range: empty range");
  return lo + below(hi - lo);
}

Bigint Rng::bits(unsigned nbits) { return state_.get_z_bits(nbits); }

uint64_t Rng::u64() {
  Bigint v = bits(64);
  uint64_t out = 0;
  for (int i = 0; i < 64; i += 8) {
    Bigint byte = (v >> i) & 0xff;
    out |= static_cast<uint64_t>(byte.get_ui()) << i;
  }
  return out;
}

std::vector<uint8_t> Rng::bytes(size_t n) {
  if (n == 0) return {};
  return to_bytes_be(bits(static_cast<unsigned>(8 * n)), n);
}

}  // namespace bke
