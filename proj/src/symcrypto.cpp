#include "bke/symcrypto.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <memory>

namespace bke::sym {

namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

CipherCtx make_ctx() {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::runtime_error("EVP_CIPHER_CTX_new failed");
  return ctx;
}

}  // namespace

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
  std::array<uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != 32)
    throw std::runtime_error("sha256 failed");
  return out;
}

std::array<uint8_t, 32> hmac_sha256(std::span<const uint8_t> key,
                                    std::span<const uint8_t> data) {
  constexpr size_t kBlock = 64;
  std::array<uint8_t, kBlock> k{};
  if (key.size() > kBlock) {
    auto h = sha256(key);
    std::memcpy(k.data(), h.data(), h.size());
  } else {
    std::memcpy(k.data(), key.data(), key.size());
  }
  std::vector<uint8_t> inner(kBlock + data.size());
  for (size_t i = 0; i < kBlock; ++i) inner[i] = k[i] ^ 0x36;
  std::memcpy(inner.data() + kBlock, data.data(), data.size());
  auto ih = sha256(inner);

  std::vector<uint8_t> outer(kBlock + ih.size());
  for (size_t i = 0; i < kBlock; ++i) outer[i] = k[i] ^ 0x5c;
  std::memcpy(outer.data() + kBlock, ih.data(), ih.size());
  return sha256(outer);
}

std::vector<uint8_t> hkdf_sha256(std::span<const uint8_t> ikm,
                                 std::span<const uint8_t> salt,
                                 std::span<const uint8_t> info,
                                 size_t out_len) {
  if (out_len == 0 || out_len > 255 * 32)
    throw std::invalid_argument("hkdf_sha256: bad output length");
  std::array<uint8_t, 32> zero_salt{};
  auto prk = hmac_sha256(salt.empty() ? std::span<const uint8_t>(zero_salt)
                                      : salt,
                         ikm);
  std::vector<uint8_t> okm;
  std::vector<uint8_t> t;
  uint8_t counter = 1;
  while (okm.size() < out_len) {
    std::vector<uint8_t> block(t);
    block.insert(block.end(), info.begin(), info.end());
    block.push_back(counter++);
    auto h = hmac_sha256(prk, block);
    t.assign(h.begin(), h.end());
    okm.insert(okm.end(), t.begin(), t.end());
  }
  okm.resize(out_len);
  return okm;
}

std::vector<uint8_t> aes128_ecb(const Key128& key,
                                std::span<const uint8_t> in) {
  if (in.size() % 16 != 0)
    throw std::invalid_argument("aes128_ecb: input not block aligned");
  auto ctx = make_ctx();
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_ecb(), nullptr, key.data(),
                         nullptr) != 1)
    throw std::runtime_error("aes init failed");
  EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
  std::vector<uint8_t> out(in.size() + 16);
  int n1 = 0, n2 = 0;
  if (EVP_EncryptUpdate(ctx.get(), out.data(), &n1, in.data(),
                        static_cast<int>(in.size())) != 1 ||
      EVP_EncryptFinal_ex(ctx.get(), out.data() + n1, &n2) != 1)
    throw std::runtime_error("aes encrypt failed");
  out.resize(static_cast<size_t>(n1 + n2));
  return out;
}

std::vector<uint8_t> aead_seal(const Key128& key,
                               std::span<const uint8_t> nonce,
                               std::span<const uint8_t> plaintext) {
  if (nonce.size() != kAeadNonceLen)
    throw std::invalid_argument("aead_seal: nonce must be 12 bytes");
  auto ctx = make_ctx();
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_gcm(), nullptr, key.data(),
                         nonce.data()) != 1)
    throw std::runtime_error("gcm init failed");
  std::vector<uint8_t> out(plaintext.size() + kAeadTagLen);
  int n1 = 0, n2 = 0;
  if (EVP_EncryptUpdate(ctx.get(), out.data(), &n1, plaintext.data(),
                        static_cast<int>(plaintext.size())) != 1 ||
      EVP_EncryptFinal_ex(ctx.get(), out.data() + n1, &n2) != 1)
    throw std::runtime_error("gcm encrypt failed");
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kAeadTagLen,
                          out.data() + n1 + n2) != 1)
    throw std::runtime_error("gcm tag failed");
  out.resize(static_cast<size_t>(n1 + n2) + kAeadTagLen);
  return out;
}

std::vector<uint8_t> aead_open(const Key128& key,
                               std::span<const uint8_t> nonce,
                               std::span<const uint8_t> ct_with_tag) {
  if (nonce.size() != kAeadNonceLen)
    throw std::invalid_argument("aead_open: nonce must be 12 bytes");
  if (ct_with_tag.size() < kAeadTagLen)
    throw AeadError("aead_open: ciphertext truncated");
  size_t ct_len = ct_with_tag.size() - kAeadTagLen;

  auto ctx = make_ctx();
  if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_128_gcm(), nullptr, key.data(),
                         nonce.data()) != 1)
    throw std::runtime_error("gcm init failed");
  std::vector<uint8_t> out(ct_len + 16);
  int n1 = 0, n2 = 0;
  if (ct_len > 0 &&
      EVP_DecryptUpdate(ctx.get(), out.data(), &n1, ct_with_tag.data(),
                        static_cast<int>(ct_len)) != 1)
    throw AeadError("aead_open: decrypt failed");
  uint8_t tag[kAeadTagLen];
  std::memcpy(tag, ct_with_tag.data() + ct_len, kAeadTagLen);
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kAeadTagLen,
                          tag) != 1)
    throw std::runtime_error("gcm set tag failed");
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + n1, &n2) != 1)
    throw AeadError("aead_open: authentication failed");
  out.resize(static_cast<size_t>(n1 + n2));
  return out;
}

}  // namespace bke::sym
