#include "bke/rsa_bke.hpp"

#include <cstring>
#include <stdexcept>

#include "bke/symcrypto.hpp"

namespace bke::rsa {

namespace {

constexpr unsigned kStandardSizes[] = {1024, 2048, 3072, 7680, 15360};

bool is_standard_size(unsigned bits) {
  for (unsigned s : kStandardSizes)
    if (s == bits) return true;
  return false;
}

}  // namespace

Caterpillar gen_caterpillar(unsigned modulus_bits, Rng& rng) {
  if (!is_standard_size(modulus_bits) && modulus_bits < 16)
    throw std::invalid_argument("gen_caterpillar: unsupported modulus size");

  Caterpillar cat;
  cat.modulus_bits = modulus_bits;
  unsigned half = modulus_bits / 2;
  while (true) {
    cat.rho = random_prime(rng, half, /*top_two_bits_set=*/true);
    cat.zeta = random_prime(rng, modulus_bits - half, true);
    if (cat.rho == cat.zeta) continue;
    cat.N = cat.rho * cat.zeta;
    if (bit_length(cat.N) != modulus_bits) continue;
    break;
  }
  cat.phi = (cat.rho - 1) * (cat.zeta - 1);
  while (true) {
    cat.S = rng.range(3, cat.phi);
    if (gcd(cat.S, cat.phi) == 1) break;
  }
  cat.s = invmod(cat.S, cat.phi);
  return cat;
}

Caterpillar caterpillar_from_primes(const Bigint& rho, const Bigint& zeta,
                                    const Bigint& S) {
  if (rho == zeta)
    throw std::invalid_argument("caterpillar_from_primes: equal primes");
  Caterpillar cat;
  cat.rho = rho;
  cat.zeta = zeta;
  cat.N = rho * zeta;
  cat.phi = (rho - 1) * (zeta - 1);
  cat.S = S;
  if (gcd(S, cat.phi) != 1)
    throw std::invalid_argument("caterpillar_from_primes: S not coprime");
  cat.s = invmod(S, cat.phi);
  cat.modulus_bits = static_cast<unsigned>(bit_length(cat.N));
  return cat;
}

ExpansionValues gen_expansion_values(const Caterpillar& cat,
                                     unsigned prime_bits, Rng& rng) {
  if (prime_bits < 16)
    throw std::invalid_argument("gen_expansion_values: primes too small");
  ExpansionValues ev;
  auto fresh_prime = [&] {
    while (true) {
      Bigint p = random_prime(rng, prime_bits);
      if (cat.phi % p != 0) return p;
    }
  };
  ev.g = fresh_prime();
  do {
    ev.h = fresh_prime();
  } while (ev.h == ev.g);
  do {
    ev.v = fresh_prime();
  } while (ev.v == ev.g || ev.v == ev.h);
  ev.alpha = ev.g * ev.h * cat.phi;
  ev.beta = ev.v * ev.h * cat.phi;
  if (gcd(ev.alpha, ev.beta) != ev.h * cat.phi)
    throw std::logic_error("gen_expansion_values: gcd identity violated");
  return ev;
}

ExpansionValues expansion_values_from_primes(const Bigint& phi, const Bigint& g,
                                             const Bigint& h, const Bigint& v,
                                             Rng& rng, bool allow_equal_gv) {
  for (const Bigint* p : {&g, &h, &v}) {
    if (!is_probable_prime(*p, rng))
      throw std::invalid_argument("expansion_values_from_primes: not prime");
  }
  if (!allow_equal_gv && (g == v || g == h || h == v))
    throw std::invalid_argument(
        "expansion_values_from_primes: primes must be distinct");
  ExpansionValues ev;
  ev.g = g;
  ev.h = h;
  ev.v = v;
  ev.alpha = g * h * phi;
  ev.beta = v * h * phi;
  if (g != v && phi % g != 0 && phi % v != 0 &&
      gcd(ev.alpha, ev.beta) != ev.h * phi)
    throw std::logic_error("expansion_values_from_primes: gcd mismatch");
  return ev;
}

CocoonKey expand_cocoon(const Bigint& S, const Bigint& alpha, const Bigint& r,
                        uint64_t index) {
  if (r < 1)
    throw std::invalid_argument("expand_cocoon: r must be >= 1");
  return CocoonKey{index, r, S + r * alpha};
}

ButterflyKey expand_butterfly(const Bigint& J, const Bigint& beta,
                              const Bigint& o, uint64_t index) {
  if (o < 1)
    throw std::invalid_argument("expand_butterfly: o must be >= 1");
  return ButterflyKey{index, o, J + o * beta};
}

Bigint encrypt(const Bigint& x, const Bigint& e, const Bigint& N) {
  if (x < 1 || x >= N)
    throw std::invalid_argument("encrypt: plaintext out of range");
  if (e < 1) throw std::invalid_argument("encrypt: bad exponent");
  return powmod(x, e, N);
}

Bigint decrypt(const Bigint& c, const Bigint& s, const Bigint& N) {
  if (c < 0 || c >= N)
    throw std::invalid_argument("decrypt: ciphertext out of range");
  return powmod(c, s, N);
}

bool verify_exponent_congruence(const Bigint& e, const Caterpillar& cat) {
  return (cat.s * e) % cat.phi == 1;
}

namespace {

sym::Key128 kem_key(const Bigint& z, size_t modulus_bytes) {
  auto z_bytes = to_bytes_be(z, modulus_bytes);
  auto digest = sym::sha256(z_bytes);
  sym::Key128 key{};
  std::memcpy(key.data(), digest.data(), key.size());
  return key;
}

}  // namespace

WrappedValue wrap_value(const Bigint& value, const Bigint& recipient_N,
                        const Bigint& recipient_S, Rng& rng) {
  if (value <= 0) throw std::invalid_argument("wrap_value: value must be > 0");
  size_t width = (bit_length(recipient_N) + 7) / 8;
  Bigint z = rng.range(2, recipient_N);
  WrappedValue out;
  out.kem_ct = to_bytes_be(powmod(z, recipient_S, recipient_N), width);
  auto key = kem_key(z, width);
  auto nonce = rng.bytes(sym::kAeadNonceLen);
  auto sealed = sym::aead_seal(key, nonce, to_bytes_be(value));
  out.box = nonce;
  out.box.insert(out.box.end(), sealed.begin(), sealed.end());
  return out;
}

Bigint unwrap_value(const WrappedValue& wrapped, const Bigint& recipient_N,
                    const Bigint& recipient_s) {
  size_t width = (bit_length(recipient_N) + 7) / 8;
  if (wrapped.kem_ct.size() != width)
    throw sym::AeadError("unwrap_value: bad envelope width");
  if (wrapped.box.size() < sym::kAeadNonceLen + sym::kAeadTagLen)
    throw sym::AeadError("unwrap_value: box truncated");
  Bigint z = powmod(from_bytes_be(wrapped.kem_ct), recipient_s, recipient_N);
  auto key = kem_key(z, width);
  std::span<const uint8_t> box(wrapped.box);
  auto plain = sym::aead_open(key, box.subspan(0, sym::kAeadNonceLen),
                              box.subspan(sym::kAeadNonceLen));
  return from_bytes_be(plain);
}

}  // namespace bke::rsa
