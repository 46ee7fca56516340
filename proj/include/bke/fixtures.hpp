#pragma once

#include <vector>

#include "bke/bigint.hpp"
#include "bke/rsa_bke.hpp"

namespace bke::fixtures {

/// Small-integer RSA expansion vector (10-bit primes) used by the
/// `verify-example` command and the golden tests. All values are exact.
struct RsaExample {
  Bigint rho, zeta, N, phi, s, S;
  Bigint g, h, v;
  Bigint alpha, beta;
  Bigint gcd_alpha_beta;  // == h * phi
  std::vector<Bigint> r;  // cocoon randomness per index
  std::vector<Bigint> o;  // butterfly randomness per index
  std::vector<Bigint> J;  // expected cocoon keys
  std::vector<Bigint> H;  // expected butterfly keys
  Bigint plaintext;       // sample message for the round-trip check
  /// A circulated transcription of this example misprints H[1] as this
  /// value (it equals J[0] and fails H = J + o*beta); H above stores the
  /// recomputed key.
  Bigint misprinted_h2;
};

const RsaExample& rsa_example_10bit();

/// Pre-generated caterpillars for the slow RSA modulus sizes. Key
/// generation sits outside every timed region, so benchmarks may use
/// these without biasing results.
bool has_cached_caterpillar(unsigned modulus_bits);
const rsa::Caterpillar& cached_caterpillar(unsigned modulus_bits);

}  // namespace bke::fixtures
