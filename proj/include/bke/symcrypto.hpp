#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace bke::sym {

using Key128 = std::array<uint8_t, 16>;

constexpr size_t kAeadNonceLen = 12;
constexpr size_t kAeadTagLen = 16;

/// Authenticated decryption failed (tag mismatch / truncated input).
struct AeadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);

std::array<uint8_t, 32> hmac_sha256(std::span<const uint8_t> key,
                                    std::span<const uint8_t> data);

/// HKDF extract-and-expand (RFC 5869) with SHA-256.
std::vector<uint8_t> hkdf_sha256(std::span<const uint8_t> ikm,
                                 std::span<const uint8_t> salt,
                                 std::span<const uint8_t> info,
                                 size_t out_len);

/// Raw AES-128 block encryption (no padding); in.size() must be a
/// multiple of 16.
std::vector<uint8_t> aes128_ecb(const Key128& key,
                                std::span<const uint8_t> in);

/// AES-128-GCM. Returns ciphertext with the 16-byte tag appended.
std::vector<uint8_t> aead_seal(const Key128& key,
                               std::span<const uint8_t> nonce,
                               std::span<const uint8_t> plaintext);

/// Throws AeadError on tag mismatch.
std::vector<uint8_t> aead_open(const Key128& key,
                               std::span<const uint8_t> nonce,
                               std::span<const uint8_t> ct_with_tag);

}  // namespace bke::sym
