// SPDX-License-Identifier: Apache-2.0
#include "trustgate/crypto.hpp"

#include <sodium.h>

#include <stdexcept>

namespace trustgate::crypto {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) {
    throw std::runtime_error("libsodium initialization failed");
  }
}

}  // namespace

std::string base64url_encode(std::span<const std::uint8_t> data) {
  ensure_sodium();
  std::string out;
  out.resize(sodium_base64_ENCODED_LEN(data.size(),
                                       sodium_base64_VARIANT_URLSAFE_NO_PADDING));
  sodium_bin2base64(out.data(), out.size(), data.data(), data.size(),
                    sodium_base64_VARIANT_URLSAFE_NO_PADDING);
  out.resize(std::char_traits<char>::length(out.c_str()));
  return out;
}

std::string base64url_encode(std::string_view text) {
  return base64url_encode(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::optional<Bytes> base64url_decode(std::string_view text) {
  ensure_sodium();
  Bytes out(text.size() == 0 ? 0 : text.size(), 0);
  std::size_t out_len = 0;
  const char* end = nullptr;
  if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(),
                        /*ignore=*/nullptr, &out_len, &end,
                        sodium_base64_VARIANT_URLSAFE_NO_PADDING) != 0) {
    return std::nullopt;
  }
  if (end != text.data() + text.size()) {
    return std::nullopt;
  }
  out.resize(out_len);
  return out;
}

Bytes sha256(std::span<const std::uint8_t> data) {
  ensure_sodium();
  Bytes digest(kSha256Bytes, 0);
  crypto_hash_sha256(digest.data(), data.data(), data.size());
  return digest;
}

std::string sha256_hex(std::span<const std::uint8_t> data) {
  const Bytes digest = sha256(data);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (std::uint8_t b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0x0f]);
  }
  return out;
}

std::string sha256_hex(std::string_view text) {
  return sha256_hex(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Ed25519KeyPair ed25519_keypair_from_seed(std::span<const std::uint8_t> seed) {
  ensure_sodium();
  if (seed.size() != kEd25519SeedBytes) {
    throw std::invalid_argument("Ed25519 seed must be 32 bytes");
  }
  Ed25519KeyPair pair;
  pair.public_key.resize(kEd25519PublicKeyBytes);
  pair.secret_key.resize(kEd25519SecretKeyBytes);
  crypto_sign_seed_keypair(pair.public_key.data(), pair.secret_key.data(),
                           seed.data());
  return pair;
}

Bytes ed25519_sign(std::span<const std::uint8_t> message,
                   std::span<const std::uint8_t> secret_key) {
  ensure_sodium();
  if (secret_key.size() != kEd25519SecretKeyBytes) {
    throw std::invalid_argument("Ed25519 secret key must be 64 bytes");
  }
  Bytes sig(kEd25519SignatureBytes, 0);
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                       secret_key.data());
  return sig;
}

bool ed25519_verify(std::span<const std::uint8_t> message,
                    std::span<const std::uint8_t> signature,
                    std::span<const std::uint8_t> public_key) {
  ensure_sodium();
  if (signature.size() != kEd25519SignatureBytes ||
      public_key.size() != kEd25519PublicKeyBytes) {
    return false;
  }
  return crypto_sign_verify_detached(signature.data(), message.data(),
                                     message.size(), public_key.data()) == 0;
}

}  // namespace trustgate::crypto
