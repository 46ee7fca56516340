#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bke {

class Rng;

/// Arbitrary-precision nonnegative integer used throughout the library.
using Bigint = mpz_class;

/// Lowercase hex, no prefix, "0" for zero.
std::string to_hex(const Bigint& v);
Bigint from_hex(const std::string& s);

/// Fixed-width big-endian encoding; throws std::invalid_argument if v
/// needs more than `width` bytes or is negative.
std::vector<uint8_t> to_bytes_be(const Bigint& v, size_t width);

/// Minimal big-endian encoding (one zero byte for v == 0).
std::vector<uint8_t> to_bytes_be(const Bigint& v);

Bigint from_bytes_be(std::span<const uint8_t> bytes);

/// Number of significant bits; 0 for v == 0.
size_t bit_length(const Bigint& v);

/// base^exp mod m, exp >= 0, m > 0.
Bigint powmod(const Bigint& base, const Bigint& exp, const Bigint& m);

/// Multiplicative inverse of a mod m; throws std::domain_error if none exists.
Bigint invmod(const Bigint& a, const Bigint& m);

Bigint gcd(const Bigint& a, const Bigint& b);

/// Trial division by small primes followed by Miller-Rabin on random bases.
bool is_probable_prime(const Bigint& n, Rng& rng, int rounds = 64);

/// Uniform random prime of exactly `bits` bits. With `top_two_bits_set`
/// the two leading bits are forced so a product of two such primes has
/// exactly 2*bits bits.
Bigint random_prime(Rng& rng, unsigned bits, bool top_two_bits_set = false);

}  // namespace bke
