#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bke/ecc_bke.hpp"

using namespace bke;
using namespace bke::ecc;

TEST_CASE("caterpillar generation is consistent and seed-deterministic") {
  const Curve& curve = Curve::by_name("P-256");
  Rng rng(42);
  CaterpillarSet set = gen_caterpillar(curve, rng);
  CHECK(curve.mul_base(set.a) == set.A);
  CHECK(curve.mul_base(set.p) == set.P);
  CHECK(set.ck != set.ek);

  Rng r1(0), r2(0);
  const Curve& p192 = Curve::by_name("P-192");
  CaterpillarSet s1 = gen_caterpillar(p192, r1);
  CaterpillarSet s2 = gen_caterpillar(p192, r2);
  CHECK(s1.a == s2.a);
  CHECK(s1.ck == s2.ck);

  Rng r3(43);
  CHECK(gen_caterpillar(curve, r3).a != set.a);
}

TEST_CASE("expansion_f is a deterministic map into [0, n)") {
  const Curve& curve = Curve::by_name("P-256");
  const Bigint& n = curve.order();
  Rng rng(5);
  sym::Key128 key{};
  auto kb = rng.bytes(16);
  std::copy(kb.begin(), kb.end(), key.begin());

  CHECK(expansion_f(key, 5, n) == expansion_f(key, 5, n));
  CHECK(expansion_f(key, 5, n) != expansion_f(key, 6, n));

  for (int i = 0; i < 1000; ++i) {
    auto key_bytes = rng.bytes(16);
    sym::Key128 k{};
    std::copy(key_bytes.begin(), key_bytes.end(), k.begin());
    Bigint out = expansion_f(k, rng.u64(), n);
    CHECK(out >= 0);
    CHECK(out < n);
  }

  CHECK_THROWS_AS(expansion_f(key, Bigint(1) << 64, n),
                  std::invalid_argument);
  CHECK_NOTHROW(expansion_f(key, (Bigint(1) << 64) - 1, n));
}

TEST_CASE("expansion_f: no collisions across keys and indices") {
  const Curve& curve = Curve::by_name("P-192");
  Rng rng(77);
  std::set<std::string> seen;
  size_t total = 0;
  for (int keys = 0; keys < 100; ++keys) {
    auto key_bytes = rng.bytes(16);
    sym::Key128 k{};
    std::copy(key_bytes.begin(), key_bytes.end(), k.begin());
    for (uint64_t i = 0; i < 100; ++i) {
      seen.insert(to_hex(expansion_f(k, i, curve.order())));
      ++total;
    }
  }
  CHECK(seen.size() == total);
}

TEST_CASE("cocoon expansion matches the defining formulas") {
  const Curve& curve = Curve::by_name("P-256");
  Rng rng(9);
  CaterpillarSet set = gen_caterpillar(curve, rng);

  CocoonPair c0 = expand_cocoon(set.A, set.P, set.ck, set.ek, 0, curve);
  CocoonPair c1 = expand_cocoon(set.A, set.P, set.ck, set.ek, 1, curve);
  CHECK_FALSE(c0.B == c1.B);

  // B_i - A == f1(ck, i) G
  Bigint f1 = expansion_f(set.ck, 1, curve.order());
  CHECK(curve.add(c1.B, curve.negate(set.A)) == curve.mul_base(f1));

  // b_i G == B_i and q_i G == Q_i
  Bigint b1 = (set.a + f1) % curve.order();
  CHECK(curve.mul_base(b1) == c1.B);
  Bigint f2 = expansion_f(set.ek, 1, curve.order());
  Bigint q1 = (set.p + f2) % curve.order();
  CHECK(curve.mul_base(q1) == c1.Q);

  Point off_curve{set.A.x, set.A.y + 1, false};
  CHECK_THROWS_AS(expand_cocoon(off_curve, set.P, set.ck, set.ek, 0, curve),
                  std::invalid_argument);
}

TEST_CASE("ecies round trip and tamper rejection") {
  const Curve& curve = Curve::by_name("P-224");
  Rng rng(13);
  Bigint priv = rng.range(1, curve.order());
  Point pub = curve.mul_base(priv);

  auto msg = rng.bytes(28);
  auto ct = ecies_encrypt(curve, pub, msg, rng);
  CHECK(ecies_decrypt(curve, priv, ct) == msg);

  auto ct2 = ecies_encrypt(curve, pub, msg, rng);
  CHECK(ct != ct2);  // fresh ephemeral key and nonce

  auto bad = ct;
  bad.back() ^= 1;
  CHECK_THROWS_AS(ecies_decrypt(curve, priv, bad), sym::AeadError);
  CHECK_THROWS_AS(ecies_decrypt(curve, priv + 1, ct), sym::AeadError);
}

TEST_CASE("ecdsa sign/verify") {
  const Curve& curve = Curve::by_name("P-256");
  Rng rng(21);
  EcdsaKeyPair kp = gen_ecdsa_keypair(curve, rng);
  auto msg = rng.bytes(64);
  auto sig = ecdsa_sign(curve, kp.priv, msg, rng);
  CHECK(ecdsa_verify(curve, kp.pub, msg, sig));

  auto bad_sig = sig;
  bad_sig[3] ^= 1;
  CHECK_FALSE(ecdsa_verify(curve, kp.pub, msg, bad_sig));
  auto bad_msg = msg;
  bad_msg[0] ^= 1;
  CHECK_FALSE(ecdsa_verify(curve, kp.pub, bad_msg, sig));
}

TEST_CASE("full expansion round trip on every curve") {
  for (const auto& name : Curve::names()) {
    const Curve& curve = Curve::by_name(name);
    Rng rng(99);
    CaterpillarSet set = gen_caterpillar(curve, rng);
    EcdsaKeyPair aca = gen_ecdsa_keypair(curve, rng);

    CocoonPair cocoon = expand_cocoon(set.A, set.P, set.ck, set.ek, 3, curve);
    ButterflyResult res = aca_contribution(cocoon, curve, aca.priv, rng);
    ButterflyPrivate priv =
        derive_private(set, 3, res.c_ct, res.signature, aca.pub);

    CHECK(curve.mul_base(priv.b) == cocoon.B);
    CHECK(curve.mul_base(priv.q) == cocoon.Q);
    CHECK(curve.mul_base(priv.butterfly_priv) == res.butterfly_pub);
  }
}

TEST_CASE("two contributions on one cocoon differ") {
  const Curve& curve = Curve::by_name("P-192");
  Rng rng(3);
  CaterpillarSet set = gen_caterpillar(curve, rng);
  EcdsaKeyPair aca = gen_ecdsa_keypair(curve, rng);
  CocoonPair cocoon = expand_cocoon(set.A, set.P, set.ck, set.ek, 0, curve);
  ButterflyResult r1 = aca_contribution(cocoon, curve, aca.priv, rng);
  ButterflyResult r2 = aca_contribution(cocoon, curve, aca.priv, rng);
  CHECK_FALSE(r1.butterfly_pub == r2.butterfly_pub);
  CHECK(r1.c_ct != r2.c_ct);
}

TEST_CASE("derive_private error classes are distinct") {
  const Curve& curve = Curve::by_name("P-192");
  Rng rng(8);
  CaterpillarSet set = gen_caterpillar(curve, rng);
  EcdsaKeyPair aca = gen_ecdsa_keypair(curve, rng);
  CocoonPair c0 = expand_cocoon(set.A, set.P, set.ck, set.ek, 0, curve);
  CocoonPair c1 = expand_cocoon(set.A, set.P, set.ck, set.ek, 1, curve);
  ButterflyResult res = aca_contribution(c0, curve, aca.priv, rng);

  // flipped signature bit -> signature error
  auto bad_sig = res.signature;
  bad_sig[0] ^= 1;
  CHECK_THROWS_AS(derive_private(set, 0, res.c_ct, bad_sig, aca.pub),
                  SignatureError);

  // contribution encrypted for Q_0 but presented as index 1 -> the EE's
  // q_1 cannot open it
  ButterflyResult res1 = aca_contribution(c1, curve, aca.priv, rng);
  (void)res1;
  CHECK_THROWS_AS(derive_private(set, 1, res.c_ct, res.signature, aca.pub),
                  DecryptError);

  // honest path still fine
  CHECK_NOTHROW(derive_private(set, 0, res.c_ct, res.signature, aca.pub));
}

TEST_CASE("honest flow yields 20 valid, distinct butterfly keypairs") {
  const Curve& curve = Curve::by_name("P-256");
  Rng rng(1);
  CaterpillarSet set = gen_caterpillar(curve, rng);
  EcdsaKeyPair aca = gen_ecdsa_keypair(curve, rng);
  std::set<std::string> pubs;
  for (uint64_t i = 0; i < 20; ++i) {
    CocoonPair cocoon = expand_cocoon(set.A, set.P, set.ck, set.ek, i, curve);
    ButterflyResult res = aca_contribution(cocoon, curve, aca.priv, rng);
    ButterflyPrivate priv =
        derive_private(set, i, res.c_ct, res.signature, aca.pub);
    CHECK(curve.mul_base(priv.butterfly_priv) == res.butterfly_pub);
    pubs.insert(curve.point_hex(res.butterfly_pub));
  }
  CHECK(pubs.size() == 20);
}
