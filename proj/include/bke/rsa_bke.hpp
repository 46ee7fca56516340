#pragma once

#include <cstdint>
#include <vector>

#include "bke/bigint.hpp"
#include "bke/rng.hpp"

namespace bke::rsa {

/// RSA caterpillar material. The single private exponent s doubles as
/// cocoon and butterfly private key; no per-index private derivation
/// exists in this scheme.
struct Caterpillar {
  Bigint rho;   // prime factor
  Bigint zeta;  // prime factor
  Bigint N;     // rho * zeta
  Bigint phi;   // (rho - 1) * (zeta - 1)
  Bigint s;     // private exponent
  Bigint S;     // public exponent, s * S == 1 (mod phi)
  unsigned modulus_bits = 0;
};

/// Generates a caterpillar with bitlen(N) == modulus_bits exactly.
/// S is drawn uniformly from [3, phi) coprime to phi.
/// modulus_bits must be one of {1024, 2048, 3072, 7680, 15360} or a
/// small test size >= 16.
Caterpillar gen_caterpillar(unsigned modulus_bits, Rng& rng);

/// Builds a caterpillar from explicit primes and public exponent
/// (fixtures, replays); derives s = S^-1 mod phi and validates.
Caterpillar caterpillar_from_primes(const Bigint& rho, const Bigint& zeta,
                                    const Bigint& S);

/// Expansion values alpha = g*h*phi and beta = v*h*phi for distinct
/// primes g, h, v that do not divide phi. gcd(alpha, beta) == h*phi.
struct ExpansionValues {
  Bigint g, h, v;
  Bigint alpha;
  Bigint beta;
};

ExpansionValues gen_expansion_values(const Caterpillar& cat,
                                     unsigned prime_bits, Rng& rng);

/// Explicit-prime construction; checks primality and the gcd identity.
/// allow_equal_gv permits the degenerate g == v case for tests probing
/// collusion behaviour.
ExpansionValues expansion_values_from_primes(const Bigint& phi, const Bigint& g,
                                             const Bigint& h, const Bigint& v,
                                             Rng& rng,
                                             bool allow_equal_gv = false);

/// Cocoon key J_i = S + r_i * alpha (plain integer arithmetic).
struct CocoonKey {
  uint64_t index;
  Bigint r;
  Bigint J;
};

CocoonKey expand_cocoon(const Bigint& S, const Bigint& alpha, const Bigint& r,
                        uint64_t index = 0);

/// Butterfly key H_i = J_i + o_i * beta.
struct ButterflyKey {
  uint64_t index;
  Bigint o;
  Bigint H;
};

ButterflyKey expand_butterfly(const Bigint& J, const Bigint& beta,
                              const Bigint& o, uint64_t index = 0);

/// Textbook RSA: x^e mod N for 1 <= x < N. The exponent may be S or any
/// expanded J_i / H_i.
Bigint encrypt(const Bigint& x, const Bigint& e, const Bigint& N);
/// c^s mod N for 0 <= c < N.
Bigint decrypt(const Bigint& c, const Bigint& s, const Bigint& N);

/// Test-harness check: s * e == 1 (mod phi). Holds for e = S and for
/// every J_i and H_i expanded from the same caterpillar.
bool verify_exponent_congruence(const Bigint& e, const Caterpillar& cat);

/// Hybrid envelope delivering an expansion value to a long-term RSA key:
/// random z in [2, N) enveloped as z^S mod N, payload AEAD-sealed under a
/// key derived from z.
struct WrappedValue {
  std::vector<uint8_t> kem_ct;  // fixed width of the recipient modulus
  std::vector<uint8_t> box;     // nonce || ciphertext || tag
};

WrappedValue wrap_value(const Bigint& value, const Bigint& recipient_N,
                        const Bigint& recipient_S, Rng& rng);
/// Throws sym::AeadError when the envelope was tampered with or the key
/// is wrong.
Bigint unwrap_value(const WrappedValue& wrapped, const Bigint& recipient_N,
                    const Bigint& recipient_s);

}  // namespace bke::rsa
