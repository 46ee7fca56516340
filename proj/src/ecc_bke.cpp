#include "bke/ecc_bke.hpp"

#include <cstring>

namespace bke::ecc {

namespace {

constexpr std::string_view kEciesInfo = "bke-ecies-v1";

sym::Key128 key_from_bytes(std::span<const uint8_t> bytes) {
  sym::Key128 k{};
  std::memcpy(k.data(), bytes.data(), k.size());
  return k;
}

}  // namespace

CaterpillarSet gen_caterpillar(const Curve& curve, Rng& rng) {
  CaterpillarSet set;
  set.curve = &curve;
  set.a = rng.range(1, curve.order());
  set.A = curve.mul_base(set.a);
  set.p = rng.range(1, curve.order());
  set.P = curve.mul_base(set.p);
  auto ck = rng.bytes(16);
  auto ek = rng.bytes(16);
  set.ck = key_from_bytes(ck);
  set.ek = key_from_bytes(ek);
  return set;
}

Bigint expansion_f(const sym::Key128& key, const Bigint& i, const Bigint& n) {
  if (i < 0 || bit_length(i) > 64)
    throw std::invalid_argument("expansion_f: index out of range");
  if (n <= 1) throw std::invalid_argument("expansion_f: bad order");

  size_t want_bits = bit_length(n) + 64;
  size_t nblocks = (want_bits + 127) / 128;

  auto index_bytes = to_bytes_be(i, 8);
  std::vector<uint8_t> blocks(nblocks * 16, 0);
  for (size_t blk = 0; blk < nblocks; ++blk) {
    uint8_t* b = blocks.data() + blk * 16;
    std::memcpy(b, index_bytes.data(), 8);
    // bytes 8..11 zero, bytes 12..15 big-endian block counter
    b[12] = static_cast<uint8_t>(blk >> 24);
    b[13] = static_cast<uint8_t>(blk >> 16);
    b[14] = static_cast<uint8_t>(blk >> 8);
    b[15] = static_cast<uint8_t>(blk);
  }
  auto ct = sym::aes128_ecb(key, blocks);
  return from_bytes_be(ct) % n;
}

CocoonPair expand_cocoon(const Point& A, const Point& P,
                         const sym::Key128& ck, const sym::Key128& ek,
                         uint64_t index, const Curve& curve) {
  if (!curve.on_curve(A) || !curve.on_curve(P))
    throw std::invalid_argument("expand_cocoon: point off curve");
  const Bigint& n = curve.order();
  Bigint f1 = expansion_f(ck, index, n);
  Bigint f2 = expansion_f(ek, index, n);
  return CocoonPair{index, curve.add(A, curve.mul_base(f1)),
                    curve.add(P, curve.mul_base(f2))};
}

std::vector<uint8_t> ecies_encrypt(const Curve& curve, const Point& recipient,
                                   std::span<const uint8_t> plaintext,
                                   Rng& rng) {
  if (!curve.on_curve(recipient) || recipient.infinity)
    throw std::invalid_argument("ecies_encrypt: bad recipient key");
  Bigint eph = rng.range(1, curve.order());
  Point eph_pub = curve.mul_base(eph);
  Point shared = curve.mul(eph, recipient);
  if (shared.infinity) throw std::runtime_error("ecies: degenerate secret");

  auto secret = to_bytes_be(shared.x, curve.coord_bytes());
  auto okm = sym::hkdf_sha256(
      secret, {},
      std::span<const uint8_t>(
          reinterpret_cast<const uint8_t*>(kEciesInfo.data()),
          kEciesInfo.size()),
      16);
  auto key = key_from_bytes(okm);

  auto nonce = rng.bytes(sym::kAeadNonceLen);
  auto box = sym::aead_seal(key, nonce, plaintext);

  auto out = curve.encode_point(eph_pub);
  out.insert(out.end(), nonce.begin(), nonce.end());
  out.insert(out.end(), box.begin(), box.end());
  return out;
}

std::vector<uint8_t> ecies_decrypt(const Curve& curve,
                                   const Bigint& recipient_priv,
                                   std::span<const uint8_t> ct) {
  size_t point_len = 2 * curve.coord_bytes();
  if (ct.size() < point_len + sym::kAeadNonceLen + sym::kAeadTagLen)
    throw sym::AeadError("ecies_decrypt: ciphertext truncated");
  Point eph_pub = curve.decode_point(ct.subspan(0, point_len));
  Point shared = curve.mul(recipient_priv, eph_pub);
  if (shared.infinity) throw sym::AeadError("ecies_decrypt: degenerate");

  auto secret = to_bytes_be(shared.x, curve.coord_bytes());
  auto okm = sym::hkdf_sha256(
      secret, {},
      std::span<const uint8_t>(
          reinterpret_cast<const uint8_t*>(kEciesInfo.data()),
          kEciesInfo.size()),
      16);
  auto key = key_from_bytes(okm);

  auto nonce = ct.subspan(point_len, sym::kAeadNonceLen);
  auto box = ct.subspan(point_len + sym::kAeadNonceLen);
  return sym::aead_open(key, nonce, box);
}

EcdsaKeyPair gen_ecdsa_keypair(const Curve& curve, Rng& rng) {
  Bigint d = rng.range(1, curve.order());
  return EcdsaKeyPair{d, curve.mul_base(d)};
}

namespace {

Bigint hash_to_scalar(const Curve& curve, std::span<const uint8_t> msg) {
  auto digest = sym::sha256(msg);
  Bigint e = from_bytes_be(digest);
  size_t nbits = bit_length(curve.order());
  if (nbits < 256) e >>= (256 - nbits);
  return e % curve.order();
}

}  // namespace

std::vector<uint8_t> ecdsa_sign(const Curve& curve, const Bigint& priv,
                                std::span<const uint8_t> msg, Rng& rng) {
  const Bigint& n = curve.order();
  Bigint e = hash_to_scalar(curve, msg);
  while (true) {
    Bigint k = rng.range(1, n);
    Point R = curve.mul_base(k);
    Bigint r = R.x % n;
    if (r == 0) continue;
    Bigint s = (invmod(k, n) * (e + r * priv)) % n;
    if (s == 0) continue;
    size_t w = (bit_length(n) + 7) / 8;
    auto out = to_bytes_be(r, w);
    auto s_bytes = to_bytes_be(s, w);
    out.insert(out.end(), s_bytes.begin(), s_bytes.end());
    return out;
  }
}

bool ecdsa_verify(const Curve& curve, const Point& pub,
                  std::span<const uint8_t> msg,
                  std::span<const uint8_t> signature) {
  const Bigint& n = curve.order();
  size_t w = (bit_length(n) + 7) / 8;
  if (signature.size() != 2 * w) return false;
  Bigint r = from_bytes_be(signature.subspan(0, w));
  Bigint s = from_bytes_be(signature.subspan(w));
  if (r <= 0 || r >= n || s <= 0 || s >= n) return false;
  if (pub.infinity || !curve.on_curve(pub)) return false;

  Bigint e = hash_to_scalar(curve, msg);
  Bigint sinv = invmod(s, n);
  Bigint u1 = (e * sinv) % n;
  Bigint u2 = (r * sinv) % n;
  Point pt = curve.add(curve.mul_base(u1), curve.mul(u2, pub));
  if (pt.infinity) return false;
  return pt.x % n == r;
}

ButterflyResult aca_contribution(const CocoonPair& cocoon, const Curve& curve,
                                 const Bigint& aca_sign_priv, Rng& rng) {
  if (!curve.on_curve(cocoon.B) || !curve.on_curve(cocoon.Q))
    throw std::invalid_argument("aca_contribution: cocoon off curve");
  Bigint c = rng.range(1, curve.order());
  Point C = curve.mul_base(c);

  ButterflyResult out;
  out.index = cocoon.index;
  out.butterfly_pub = curve.add(cocoon.B, C);
  auto c_bytes = to_bytes_be(c, curve.coord_bytes());
  out.c_ct = ecies_encrypt(curve, cocoon.Q, c_bytes, rng);
  out.signature = ecdsa_sign(curve, aca_sign_priv, out.c_ct, rng);
  return out;
}

ButterflyPrivate derive_private(const CaterpillarSet& set, uint64_t index,
                                std::span<const uint8_t> c_ct,
                                std::span<const uint8_t> signature,
                                const Point& aca_sign_pub) {
  const Curve& curve = *set.curve;
  const Bigint& n = curve.order();

  if (!ecdsa_verify(curve, aca_sign_pub, c_ct, signature))
    throw SignatureError("derive_private: bad contribution signature");

  Bigint f1 = expansion_f(set.ck, index, n);
  Bigint f2 = expansion_f(set.ek, index, n);
  ButterflyPrivate out;
  out.index = index;
  out.b = (set.a + f1) % n;
  out.q = (set.p + f2) % n;

  std::vector<uint8_t> c_bytes;
  try {
    c_bytes = ecies_decrypt(curve, out.q, c_ct);
  } catch (const sym::AeadError& err) {
    throw DecryptError(err.what());
  } catch (const std::invalid_argument& err) {
    throw DecryptError(err.what());
  }
  if (c_bytes.size() != curve.coord_bytes())
    throw DecryptError("derive_private: contribution has wrong width");
  Bigint c = from_bytes_be(c_bytes);

  out.butterfly_priv = (out.b + c) % n;

  // (b_i + c)G must equal B_i + C.
  Point B = curve.add(set.A, curve.mul_base(f1));
  Point expected = curve.add(B, curve.mul_base(c));
  out.butterfly_pub = curve.mul_base(out.butterfly_priv);
  if (!(out.butterfly_pub == expected))
    throw ConsistencyError("derive_private: key reconstruction mismatch");
  return out;
}

}  // namespace bke::ecc
