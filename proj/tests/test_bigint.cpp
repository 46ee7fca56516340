#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bke/bigint.hpp"
#include "bke/rng.hpp"

using namespace bke;

TEST_CASE("hex round trip") {
  CHECK(to_hex(Bigint(0)) == "0");
  CHECK(to_hex(Bigint(255)) == "ff");
  CHECK(from_hex("deadbeef") == Bigint("3735928559"));
  CHECK(from_hex(to_hex(Bigint("819557"))) == Bigint("819557"));
  CHECK_THROWS_AS(from_hex("xyz"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex(""), std::invalid_argument);
}

TEST_CASE("byte encoding is fixed width big endian") {
  auto bytes = to_bytes_be(Bigint(0x0102), 4);
  REQUIRE(bytes.size() == 4);
  CHECK(bytes[0] == 0);
  CHECK(bytes[1] == 0);
  CHECK(bytes[2] == 1);
  CHECK(bytes[3] == 2);
  CHECK(from_bytes_be(bytes) == Bigint(0x0102));
  CHECK_THROWS_AS(to_bytes_be(Bigint(0x010203), 2), std::invalid_argument);
  CHECK(to_bytes_be(Bigint(0)).size() == 1);
}

TEST_CASE("bit_length") {
  CHECK(bit_length(0) == 0);
  CHECK(bit_length(1) == 1);
  CHECK(bit_length(255) == 8);
  CHECK(bit_length(256) == 9);
}

TEST_CASE("powmod and invmod") {
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(powmod(101, 1, 819557) == 101);
  Bigint inv = invmod(65567, 817740);
  CHECK(inv == 84983);
  CHECK((inv * 65567) % 817740 == 1);
  CHECK_THROWS_AS(invmod(4, 8), std::domain_error);
}

TEST_CASE("miller-rabin agrees with a brute-force oracle") {
  // Oracle: trial division over a small range.
  auto is_prime_oracle = [](uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  Rng rng(7);
  for (uint64_t n = 0; n < 2000; ++n)
    CHECK(is_probable_prime(Bigint(static_cast<unsigned long>(n)), rng) ==
          is_prime_oracle(n));
  // Carmichael numbers must not fool it.
  for (unsigned long carmichael : {561ul, 41041ul, 825265ul})
    CHECK_FALSE(is_probable_prime(Bigint(carmichael), rng));
}

TEST_CASE("random_prime honours the bit contract") {
  Rng rng(11);
  for (unsigned bits : {16u, 24u, 48u}) {
    Bigint p = random_prime(rng, bits);
    CHECK(bit_length(p) == bits);
    CHECK(is_probable_prime(p, rng));
    Bigint q = random_prime(rng, bits, /*top_two_bits_set=*/true);
    CHECK(bit_length(q * random_prime(rng, bits, true)) == 2 * bits);
  }
}

TEST_CASE("rng determinism and bounds") {
  Rng a(42), b(42), c(43);
  CHECK(a.u64() == b.u64());
  CHECK(a.bytes(16) == b.bytes(16));
  Bigint bound("123456789123456789");
  for (int i = 0; i < 200; ++i) {
    Bigint v = a.below(bound);
    CHECK(v >= 0);
    CHECK(v < bound);
  }
  // different seed diverges
  Rng a2(42);
  bool diverged = false;
  for (int i = 0; i < 8; ++i) diverged = diverged || (a2.u64() != c.u64());
  CHECK(diverged);
  CHECK_THROWS_AS(a.range(5, 5), std::invalid_argument);
}
