// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trustgate/crypto.hpp"

namespace trustgate {

enum class SourceFormat { VC_JWT, VC_LD };
enum class ProofKind { JWS_ED25519, SD_JWT, LD_STUB };
enum class Profile { FEDERATED, SSI, HYBRID };

/// Verification disposition. E100 structural/format, E200 credential proof or
/// status, E300 chain structural integrity/anchoring, E400 delegation
/// semantics, E500 policy violation.
enum class ResultCode { OK, E100, E200, E300, E400, E500 };

std::string_view to_string(SourceFormat v);
std::string_view to_string(ProofKind v);
std::string_view to_string(Profile v);
std::string_view to_string(ResultCode v);

std::optional<SourceFormat> source_format_from_string(std::string_view s);
std::optional<ProofKind> proof_kind_from_string(std::string_view s);
std::optional<ResultCode> result_code_from_string(std::string_view s);

/// Claim/constraint/metadata values are restricted to integers and strings so
/// canonical serialization stays total and injective.
using ClaimValue = std::variant<std::int64_t, std::string>;
using ClaimMap = std::map<std::string, ClaimValue>;

struct StatusRef {
  std::string list_id;
  std::int64_t index = 0;

  bool operator==(const StatusRef&) const = default;
};

struct ProofObject {
  ProofKind kind = ProofKind::JWS_ED25519;
  std::string key_id;
  crypto::Bytes signature;
  crypto::Bytes signed_payload;  // exact signed byte sequence; empty for LD_STUB

  bool operator==(const ProofObject&) const = default;
};

struct Scope {
  std::set<std::string> permissions;

  bool operator==(const Scope&) const = default;
};

/// Permissions are atomic "resource:action" pairs, lowercase ASCII tokens.
bool is_valid_permission(std::string_view permission);
bool is_valid_scope(const Scope& scope);

/// child ⊆ parent under exact string equality of permission atoms.
bool scope_contains(const Scope& parent, const Scope& child);

struct NormalizedCredential {
  SourceFormat source_format = SourceFormat::VC_JWT;
  std::string issuer;
  std::string subject;
  ClaimMap claims;
  std::int64_t issued_at = 0;
  std::int64_t expires_at = 0;
  std::optional<StatusRef> status_ref;
  ProofObject proof;
  std::int64_t raw_size_bytes = 0;

  bool operator==(const NormalizedCredential&) const = default;
};

struct DelegationGrant {
  std::string grant_id;
  std::string issuer;
  std::string subject;
  Scope scope;
  std::int64_t not_before = 0;
  std::int64_t not_after = 0;
  std::string key_binding;
  std::optional<StatusRef> status_ref;
  ProofObject proof;
  ClaimMap constraints;

  bool operator==(const DelegationGrant&) const = default;
};

/// Hard engine cap on policy.max_chain_depth.
inline constexpr int kMaxChainDepthCap = 16;

struct VerificationPolicy {
  std::string policy_id;
  std::set<std::string> trusted_issuers;
  std::set<SourceFormat> allowed_credential_types;
  int max_chain_depth = 0;
  std::int64_t max_status_age_seconds = 1;
  bool require_anchor = false;
  std::optional<Scope> required_scope;

  bool operator==(const VerificationPolicy&) const = default;
};

struct StatusResolution {
  std::string list_id;
  std::int64_t index = 0;
  bool bit = false;
  std::int64_t document_issued_at = 0;

  bool operator==(const StatusResolution&) const = default;
};

struct StatusContext {
  std::int64_t checked_at = 0;
  std::vector<StatusResolution> resolutions;

  bool operator==(const StatusContext&) const = default;
};

/// The protocol-agnostic normalized verification request; sole input to the
/// deterministic verifier. chain is root-first.
struct CanonicalVerificationContext {
  std::string request_id;
  std::set<std::string> issuer_ids;
  std::string subject_id;
  std::vector<NormalizedCredential> credentials;
  std::optional<ProofObject> presenter_proof;
  std::vector<DelegationGrant> chain;
  VerificationPolicy policy;
  StatusContext status;
  ClaimMap metadata;

  bool operator==(const CanonicalVerificationContext&) const = default;
};

struct InvariantFlags {
  bool scope_containment = true;
  bool temporal_validity = true;
  bool signature_verification = true;
  bool chain_integrity = true;
  bool structural_validity = true;

  bool all() const {
    return scope_containment && temporal_validity && signature_verification &&
           chain_integrity && structural_validity;
  }

  bool operator==(const InvariantFlags&) const = default;
};

struct VerificationResultObject {
  std::string request_id;
  ResultCode result = ResultCode::OK;
  std::string detail;
  std::string profile;  // profile tag, or "UNKNOWN" when detection failed
  std::string cvc_hash;  // hex SHA-256 of the canonical CVC; empty if no CVC
  std::optional<std::string> chain_fingerprint;
  std::optional<Scope> effective_scope;
  InvariantFlags invariant_flags;
  std::int64_t checked_at = 0;
  std::string policy_id;

  bool ok() const { return result == ResultCode::OK; }

  bool operator==(const VerificationResultObject&) const = default;
};

}  // namespace trustgate
