// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trustgate/canonical.hpp"
#include "trustgate/model.hpp"

namespace trustgate {

/// Structural/format rejection; the gateway maps it to an E100 result.
struct AdapterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inbound request as accepted on /verify. presentation is either a compact
/// token (JSON string) or a VC-LD document (JSON object); chain tokens are
/// SD-JWT compact strings or LD DG objects, root-first.
struct VerificationRequest {
  std::string request_id;
  Json presentation;
  std::vector<Json> chain_tokens;
  std::string policy_id;
  std::optional<std::string> presenter_key_id;
  std::optional<crypto::Bytes> presenter_signature;
};

VerificationRequest parse_verification_request(const Json& body);

/// Shape-based detection ("declarative metadata inspection"): FEDERATED for a
/// compact JWS presentation with an all-SD-JWT (or empty) chain, SSI for an
/// LD presentation with an all-LD (or empty) chain, HYBRID for mixed formats.
Profile detect_profile(const VerificationRequest& request);

/// Parses a compact VC-JWT. Maps iss/sub/iat/exp/status/vc and preserves the
/// exact signed bytes; does not verify the signature.
NormalizedCredential parse_vc_jwt(std::string_view token);

/// Parses a VC-LD document; the LD proof is retained as an opaque LD_STUB.
NormalizedCredential parse_vc_ld(const Json& doc);

/// Parses an SD-JWT Delegation Grant: issuer-signed JWS plus optional
/// '~'-separated disclosures, each of which must hash-match a payload digest.
DelegationGrant parse_dg_sd_jwt(std::string_view token);

/// Parses an LD-encoded Delegation Grant (same claim names, LD_STUB proof).
DelegationGrant parse_dg_ld(const Json& doc);

/// Pulls the vp_token out of an OIDC4VP response envelope.
Json extract_vp_token(const Json& envelope);

bool looks_like_compact_jws(std::string_view s);
bool looks_like_sd_jwt(std::string_view s);
bool looks_like_vc_ld(const Json& doc);

/// Byte size of a raw artifact as submitted: length for compact tokens,
/// compact-serialized length for documents.
std::int64_t raw_artifact_size(const Json& artifact);

}  // namespace trustgate
