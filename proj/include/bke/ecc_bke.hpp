#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bke/curve.hpp"
#include "bke/rng.hpp"
#include "bke/symcrypto.hpp"

namespace bke::ecc {

/// ACA signature over the wrapped contribution did not verify.
struct SignatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Authenticated decryption of the contribution ciphertext failed.
struct DecryptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Reconstructed private key does not match the butterfly public key.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// End-entity caterpillar material: two EC keypairs (A = aG for the
/// signing branch, P = pG for the encryption branch) and the two
/// symmetric expansion keys shared with the RA.
struct CaterpillarSet {
  const Curve* curve;
  Bigint a;
  Point A;
  Bigint p;
  Point P;
  sym::Key128 ck;
  sym::Key128 ek;
};

CaterpillarSet gen_caterpillar(const Curve& curve, Rng& rng);

/// AES-based expansion function: encrypts blocks (i || 0 || counter)
/// under `key`, concatenates ciphertext blocks until 64 bits beyond the
/// order's width are gathered, and reduces the big-endian value mod n.
/// Deterministic in (key, i); rejects i >= 2^64.
Bigint expansion_f(const sym::Key128& key, const Bigint& i, const Bigint& n);

/// RA-side cocoon pair for index i:
///   B_i = A + f1(ck, i) * G,  Q_i = P + f2(ek, i) * G.
struct CocoonPair {
  uint64_t index;
  Point B;
  Point Q;
};

CocoonPair expand_cocoon(const Point& A, const Point& P,
                         const sym::Key128& ck, const sym::Key128& ek,
                         uint64_t index, const Curve& curve);

/// ACA-side butterfly formation: fresh c, butterfly key B_i + cG, the
/// contribution c delivered ECIES-wrapped under Q_i and signed.
struct ButterflyResult {
  uint64_t index;
  Point butterfly_pub;
  std::vector<uint8_t> c_ct;
  std::vector<uint8_t> signature;
};

ButterflyResult aca_contribution(const CocoonPair& cocoon, const Curve& curve,
                                 const Bigint& aca_sign_priv, Rng& rng);

/// End-entity reconstruction for index i:
///   b_i = (a + f1(ck,i)) mod n,  q_i = (p + f2(ek,i)) mod n,
///   butterfly private = (b_i + c) mod n.
/// Verifies the ACA signature, decrypts c, and checks that the private
/// key matches B_i + C before returning.
struct ButterflyPrivate {
  uint64_t index;
  Bigint b;
  Bigint q;
  Bigint butterfly_priv;
  Point butterfly_pub;
};

ButterflyPrivate derive_private(const CaterpillarSet& set, uint64_t index,
                                std::span<const uint8_t> c_ct,
                                std::span<const uint8_t> signature,
                                const Point& aca_sign_pub);

// --- primitives used by the flow above ---

/// ECIES-style hybrid encryption to a curve point: ephemeral ECDH,
/// HKDF-SHA256 key derivation, AES-128-GCM payload.
/// Layout: ephemeral point || nonce || ciphertext+tag.
std::vector<uint8_t> ecies_encrypt(const Curve& curve, const Point& recipient,
                                   std::span<const uint8_t> plaintext,
                                   Rng& rng);
std::vector<uint8_t> ecies_decrypt(const Curve& curve,
                                   const Bigint& recipient_priv,
                                   std::span<const uint8_t> ct);

struct EcdsaKeyPair {
  Bigint priv;
  Point pub;
};
EcdsaKeyPair gen_ecdsa_keypair(const Curve& curve, Rng& rng);

/// ECDSA over SHA-256, signature encoded as r || s fixed width.
std::vector<uint8_t> ecdsa_sign(const Curve& curve, const Bigint& priv,
                                std::span<const uint8_t> msg, Rng& rng);
bool ecdsa_verify(const Curve& curve, const Point& pub,
                  std::span<const uint8_t> msg,
                  std::span<const uint8_t> signature);

}  // namespace bke::ecc
