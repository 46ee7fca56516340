#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bke/fixtures.hpp"
#include "bke/rsa_bke.hpp"
#include "bke/symcrypto.hpp"

using namespace bke;
using namespace bke::rsa;

// The worked 10-bit example pins every expansion quantity exactly.
TEST_CASE("golden vector: caterpillar material") {
  const auto& ex = fixtures::rsa_example_10bit();
  Caterpillar cat = caterpillar_from_primes(ex.rho, ex.zeta, ex.S);
  CHECK(cat.N == ex.N);
  CHECK(cat.phi == ex.phi);
  CHECK(cat.s == ex.s);
  CHECK((cat.s * cat.S) % cat.phi == 1);
  // s*S = 5572080361 reduces to 1 mod phi
  CHECK(Bigint("5572080361") % cat.phi == 1);
}

TEST_CASE("golden vector: expansion values and keys") {
  const auto& ex = fixtures::rsa_example_10bit();
  Rng rng(1);
  ExpansionValues ev =
      expansion_values_from_primes(ex.phi, ex.g, ex.h, ex.v, rng);
  CHECK(ev.alpha == ex.alpha);
  CHECK(ev.beta == ex.beta);
  CHECK(gcd(ev.alpha, ev.beta) == ex.gcd_alpha_beta);
  CHECK(ex.gcd_alpha_beta == ex.h * ex.phi);

  for (size_t i = 0; i < ex.r.size(); ++i) {
    CocoonKey cocoon = expand_cocoon(ex.S, ev.alpha, ex.r[i], i);
    CHECK(cocoon.J == ex.J[i]);
    ButterflyKey butterfly = expand_butterfly(cocoon.J, ev.beta, ex.o[i], i);
    CHECK(butterfly.H == ex.H[i]);
  }
}

TEST_CASE("golden vector: encrypt/decrypt round trip under H_1") {
  const auto& ex = fixtures::rsa_example_10bit();
  Bigint ct = encrypt(ex.plaintext, ex.H[0], ex.N);
  CHECK(decrypt(ct, ex.s, ex.N) == ex.plaintext);
  // the recomputed H_2 also decrypts; the misprinted one does not
  CHECK(decrypt(encrypt(ex.plaintext, ex.H[1], ex.N), ex.s, ex.N) ==
        ex.plaintext);
  Bigint bad = decrypt(encrypt(ex.plaintext, ex.misprinted_h2, ex.N), ex.s,
                       ex.N);
  CHECK(bad == ex.plaintext);  // misprint equals J_1, still congruent
  CHECK(ex.misprinted_h2 == ex.J[0]);
  CHECK(ex.misprinted_h2 != ex.J[1] + ex.o[1] * ex.beta);
}

TEST_CASE("exponent congruence") {
  const auto& ex = fixtures::rsa_example_10bit();
  Caterpillar cat = caterpillar_from_primes(ex.rho, ex.zeta, ex.S);
  CHECK(verify_exponent_congruence(cat.S, cat));
  CHECK(verify_exponent_congruence(ex.J[0], cat));
  CHECK(verify_exponent_congruence(ex.J[1], cat));
  CHECK(verify_exponent_congruence(ex.H[0], cat));
  CHECK(verify_exponent_congruence(ex.H[1], cat));
  CHECK_FALSE(verify_exponent_congruence(ex.J[0] + 1, cat));
}

TEST_CASE("generated caterpillars satisfy their invariants") {
  Rng rng(99);
  for (unsigned bits : {128u, 192u}) {
    Caterpillar cat = gen_caterpillar(bits, rng);
    CHECK(bit_length(cat.N) == bits);
    CHECK(cat.N == cat.rho * cat.zeta);
    CHECK(cat.phi == (cat.rho - 1) * (cat.zeta - 1));
    CHECK(cat.rho != cat.zeta);
    CHECK((cat.s * cat.S) % cat.phi == 1);
    CHECK(cat.S >= 3);
    CHECK(cat.S < cat.phi);
    // plain RSA round trip
    Bigint x = 2;
    CHECK(decrypt(encrypt(x, cat.S, cat.N), cat.s, cat.N) == x);
  }
}

TEST_CASE("determinism under a fixed seed") {
  Rng a(7), b(7);
  Caterpillar c1 = gen_caterpillar(128, a);
  Caterpillar c2 = gen_caterpillar(128, b);
  CHECK(c1.N == c2.N);
  CHECK(c1.s == c2.s);
  Rng c(8);
  CHECK(gen_caterpillar(128, c).N != c1.N);
}

// Eq.-style property: every expanded exponent stays congruent to S and
// round-trips, over many caterpillars and randomness draws.
TEST_CASE("expansion keeps the private exponent valid (property)") {
  Rng rng(2024);
  const Bigint r_bound = Bigint(1) << 64;
  for (int trial = 0; trial < 25; ++trial) {
    Caterpillar cat = gen_caterpillar(128, rng);
    ExpansionValues ev = gen_expansion_values(cat, 32, rng);
    CHECK(gcd(ev.alpha, ev.beta) == ev.h * cat.phi);
    for (int draw = 0; draw < 8; ++draw) {
      Bigint r = rng.range(1, r_bound);
      Bigint o = rng.range(1, r_bound);
      CocoonKey cocoon = expand_cocoon(cat.S, ev.alpha, r);
      ButterflyKey butterfly = expand_butterfly(cocoon.J, ev.beta, o);
      CHECK(verify_exponent_congruence(cocoon.J, cat));
      CHECK(verify_exponent_congruence(butterfly.H, cat));
      // linearity: the deltas factor exactly
      CHECK((cocoon.J - cat.S) % ev.alpha == 0);
      CHECK((butterfly.H - cocoon.J) % ev.beta == 0);
      Bigint x;
      do {
        x = rng.range(2, cat.N);
      } while (gcd(x, cat.N) != 1);
      CHECK(decrypt(encrypt(x, cocoon.J, cat.N), cat.s, cat.N) == x);
      CHECK(decrypt(encrypt(x, butterfly.H, cat.N), cat.s, cat.N) == x);
    }
  }
}

TEST_CASE("expansion rejects degenerate randomness") {
  const auto& ex = fixtures::rsa_example_10bit();
  CHECK_THROWS_AS(expand_cocoon(ex.S, ex.alpha, 0), std::invalid_argument);
  CHECK_THROWS_AS(expand_butterfly(ex.J[0], ex.beta, 0),
                  std::invalid_argument);
  // r = 1 is the unit multiplier
  CHECK(expand_cocoon(ex.S, ex.alpha, 1).J == ex.S + ex.alpha);
  CHECK(expand_butterfly(ex.J[0], ex.beta, 1).H == ex.J[0] + ex.beta);
}

TEST_CASE("encrypt/decrypt domain checks") {
  const auto& ex = fixtures::rsa_example_10bit();
  CHECK(encrypt(1, ex.H[0], ex.N) == 1);
  CHECK(encrypt(ex.plaintext, 1, ex.N) == ex.plaintext);
  CHECK_THROWS_AS(encrypt(ex.N, ex.S, ex.N), std::invalid_argument);
  CHECK_THROWS_AS(encrypt(0, ex.S, ex.N), std::invalid_argument);
  CHECK_THROWS_AS(decrypt(ex.N, ex.s, ex.N), std::invalid_argument);
}

TEST_CASE("wrap/unwrap expansion values") {
  Rng rng(31337);
  Caterpillar recipient = gen_caterpillar(512, rng);
  const auto& ex = fixtures::rsa_example_10bit();

  WrappedValue w = wrap_value(ex.alpha, recipient.N, recipient.S, rng);
  CHECK(unwrap_value(w, recipient.N, recipient.s) == ex.alpha);

  // randomized wrapping
  WrappedValue w2 = wrap_value(ex.alpha, recipient.N, recipient.S, rng);
  CHECK(w.box != w2.box);

  // tampering must fail closed
  WrappedValue bad = w;
  bad.box[bad.box.size() / 2] ^= 1;
  CHECK_THROWS_AS(unwrap_value(bad, recipient.N, recipient.s),
                  sym::AeadError);

  // wrong recipient key
  Caterpillar other = gen_caterpillar(512, rng);
  CHECK_THROWS_AS(unwrap_value(w, other.N, other.s), sym::AeadError);

  CHECK_THROWS_AS(wrap_value(0, recipient.N, recipient.S, rng),
                  std::invalid_argument);
}
