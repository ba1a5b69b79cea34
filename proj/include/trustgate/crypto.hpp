// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trustgate::crypto {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::size_t kEd25519PublicKeyBytes = 32;
inline constexpr std::size_t kEd25519SecretKeyBytes = 64;
inline constexpr std::size_t kEd25519SeedBytes = 32;
inline constexpr std::size_t kEd25519SignatureBytes = 64;
inline constexpr std::size_t kSha256Bytes = 32;

/// base64url without padding (RFC 7515 encoding used for every binary field).
std::string base64url_encode(std::span<const std::uint8_t> data);
std::string base64url_encode(std::string_view text);

/// Strict decode: rejects padding, whitespace and non-alphabet characters.
std::optional<Bytes> base64url_decode(std::string_view text);

Bytes sha256(std::span<const std::uint8_t> data);
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(std::string_view text);

struct Ed25519KeyPair {
  Bytes public_key;  // 32 bytes
  Bytes secret_key;  // 64 bytes, libsodium layout (seed || public)
};

Ed25519KeyPair ed25519_keypair_from_seed(std::span<const std::uint8_t> seed);

Bytes ed25519_sign(std::span<const std::uint8_t> message,
                   std::span<const std::uint8_t> secret_key);

bool ed25519_verify(std::span<const std::uint8_t> message,
                    std::span<const std::uint8_t> signature,
                    std::span<const std::uint8_t> public_key);

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(std::span<const std::uint8_t> b) {
  return std::string(b.begin(), b.end());
}

}  // namespace trustgate::crypto
