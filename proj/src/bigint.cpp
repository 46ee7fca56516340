#include "bke/bigint.hpp"

#include <array>
#include <stdexcept>

#include "bke/rng.hpp"

namespace bke {

std::string to_hex(const Bigint& v) {
  if (v < 0) throw std::invalid_argument("to_hex: negative value");
  return v.get_str(16);
}

Bigint from_hex(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("from_hex: empty string");
  for (char ch : s) {
    bool ok = (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f') ||
              (ch >= 'A' && ch <= 'F');
    if (!ok) throw std::invalid_argument("from_hex: bad digit");
  }
  return Bigint(s, 16);
}

std::vector<uint8_t> to_bytes_be(const Bigint& v, size_t width) {
  if (v < 0) throw std::invalid_argument("to_bytes_be: negative value");
  size_t need = (bit_length(v) + 7) / 8;
  if (need > width) throw std::invalid_argument("to_bytes_be: value too wide");
  std::vector<uint8_t> out(width, 0);
  if (need > 0) {
    size_t count = 0;
    mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

std::vector<uint8_t> to_bytes_be(const Bigint& v) {
  size_t need = (bit_length(v) + 7) / 8;
  return to_bytes_be(v, need == 0 ? 1 : need);
}

Bigint from_bytes_be(std::span<const uint8_t> bytes) {
  Bigint v;
  if (!bytes.empty())
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

size_t bit_length(const Bigint& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Bigint powmod(const Bigint& base, const Bigint& exp, const Bigint& m) {
  if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
  if (m <= 0) throw std::invalid_argument("powmod: modulus must be positive");
  Bigint r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

Bigint invmod(const Bigint& a, const Bigint& m) {
  Bigint r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("invmod: not invertible");
  return r;
}

Bigint gcd(const Bigint& a, const Bigint& b) {
  Bigint r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t kLimit = 8192;
    std::vector<bool> composite(kLimit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint32_t j = i * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_witness(const Bigint& n, const Bigint& a, const Bigint& d,
                          unsigned r) {
  Bigint x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

}  // namespace

bool is_probable_prime(const Bigint& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  for (uint32_t p : small_primes()) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // n odd and > every sieved prime here; write n-1 = d * 2^r.
  Bigint d = n - 1;
  unsigned r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  for (int i = 0; i < rounds; ++i) {
    Bigint a = rng.range(2, n - 1);
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Bigint random_prime(Rng& rng, unsigned bits, bool top_two_bits_set) {
  if (bits < 2) throw std::invalid_argument("random_prime: bits too small");
  while (true) {
    Bigint cand = rng.bits(bits);
    mpz_setbit(cand.get_mpz_t(), bits - 1);
    if (top_two_bits_set && bits >= 3) mpz_setbit(cand.get_mpz_t(), bits - 2);
    mpz_setbit(cand.get_mpz_t(), 0);
    if (is_probable_prime(cand, rng)) return cand;
  }
}

}  // namespace bke
