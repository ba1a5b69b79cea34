// SPDX-License-Identifier: Apache-2.0
#include "trustgate/canonical.hpp"

namespace trustgate {

namespace {

Json b64(const crypto::Bytes& bytes) {
  return crypto::base64url_encode(bytes);
}

void reject_floats(const Json& value) {
  if (value.is_number_float()) {
    throw std::invalid_argument("canonical values must not contain floats");
  }
  if (value.is_object()) {
    for (const auto& [_, v] : value.items()) reject_floats(v);
  } else if (value.is_array()) {
    for (const auto& v : value) reject_floats(v);
  }
}

}  // namespace

Json canonical_json(const ClaimValue& value) {
  if (std::holds_alternative<std::int64_t>(value)) {
    return std::get<std::int64_t>(value);
  }
  return std::get<std::string>(value);
}

Json canonical_json(const ClaimMap& map) {
  Json out = Json::object();
  for (const auto& [k, v] : map) out[k] = canonical_json(v);
  return out;
}

Json canonical_json(const Scope& scope) {
  Json out = Json::array();
  for (const auto& p : scope.permissions) out.push_back(p);
  return out;
}

Json canonical_json(const StatusRef& ref) {
  return Json{{"index", ref.index}, {"list_id", ref.list_id}};
}

Json canonical_json(const ProofObject& proof) {
  return Json{{"key_id", proof.key_id},
              {"kind", to_string(proof.kind)},
              {"signature", b64(proof.signature)},
              {"signed_payload", b64(proof.signed_payload)}};
}

Json canonical_json(const NormalizedCredential& cred) {
  Json out{{"claims", canonical_json(cred.claims)},
           {"expires_at", cred.expires_at},
           {"issued_at", cred.issued_at},
           {"issuer", cred.issuer},
           {"proof", canonical_json(cred.proof)},
           {"raw_size_bytes", cred.raw_size_bytes},
           {"source_format", to_string(cred.source_format)},
           {"subject", cred.subject}};
  if (cred.status_ref) out["status_ref"] = canonical_json(*cred.status_ref);
  return out;
}

Json canonical_json(const DelegationGrant& grant) {
  Json out{{"constraints", canonical_json(grant.constraints)},
           {"grant_id", grant.grant_id},
           {"issuer", grant.issuer},
           {"key_binding", grant.key_binding},
           {"not_after", grant.not_after},
           {"not_before", grant.not_before},
           {"proof", canonical_json(grant.proof)},
           {"scope", canonical_json(grant.scope)},
           {"subject", grant.subject}};
  if (grant.status_ref) out["status_ref"] = canonical_json(*grant.status_ref);
  return out;
}

Json canonical_json(std::span<const DelegationGrant> chain) {
  Json out = Json::array();
  for (const auto& g : chain) out.push_back(canonical_json(g));
  return out;
}

Json canonical_json(const VerificationPolicy& policy) {
  Json types = Json::array();
  for (const auto f : policy.allowed_credential_types) {
    types.push_back(to_string(f));
  }
  Json issuers = Json::array();
  for (const auto& i : policy.trusted_issuers) issuers.push_back(i);
  Json out{{"allowed_credential_types", types},
           {"max_chain_depth", policy.max_chain_depth},
           {"max_status_age_seconds", policy.max_status_age_seconds},
           {"policy_id", policy.policy_id},
           {"require_anchor", policy.require_anchor},
           {"trusted_issuers", issuers}};
  if (policy.required_scope) {
    out["required_scope"] = canonical_json(*policy.required_scope);
  }
  return out;
}

Json canonical_json(const StatusContext& status) {
  Json resolutions = Json::array();
  for (const auto& r : status.resolutions) {
    resolutions.push_back(Json{{"bit", r.bit},
                               {"document_issued_at", r.document_issued_at},
                               {"index", r.index},
                               {"list_id", r.list_id}});
  }
  return Json{{"checked_at", status.checked_at}, {"resolutions", resolutions}};
}

Json canonical_json(const CanonicalVerificationContext& cvc) {
  Json creds = Json::array();
  for (const auto& c : cvc.credentials) creds.push_back(canonical_json(c));
  Json issuers = Json::array();
  for (const auto& i : cvc.issuer_ids) issuers.push_back(i);
  Json out{{"chain", canonical_json(std::span(cvc.chain))},
           {"credentials", creds},
           {"issuer_ids", issuers},
           {"metadata", canonical_json(cvc.metadata)},
           {"policy", canonical_json(cvc.policy)},
           {"request_id", cvc.request_id},
           {"status", canonical_json(cvc.status)},
           {"subject_id", cvc.subject_id}};
  if (cvc.presenter_proof) {
    out["presenter_proof"] = canonical_json(*cvc.presenter_proof);
  }
  return out;
}

Json canonical_json(const InvariantFlags& flags) {
  return Json{{"chain_integrity", flags.chain_integrity},
              {"scope_containment", flags.scope_containment},
              {"signature_verification", flags.signature_verification},
              {"structural_validity", flags.structural_validity},
              {"temporal_validity", flags.temporal_validity}};
}

Json canonical_json(const VerificationResultObject& vro) {
  Json out{{"checked_at", vro.checked_at},
           {"cvc_hash", vro.cvc_hash},
           {"detail", vro.detail},
           {"invariant_flags", canonical_json(vro.invariant_flags)},
           {"policy_id", vro.policy_id},
           {"profile", vro.profile},
           {"request_id", vro.request_id},
           {"result", to_string(vro.result)}};
  if (vro.chain_fingerprint) out["chain_fingerprint"] = *vro.chain_fingerprint;
  if (vro.effective_scope) {
    out["effective_scope"] = canonical_json(*vro.effective_scope);
  }
  return out;
}

std::string canonical_bytes(const Json& value) {
  reject_floats(value);
  return value.dump();
}

std::string chain_fingerprint(std::span<const DelegationGrant> chain) {
  if (chain.empty()) {
    throw EmptyChainError();
  }
  return crypto::sha256_hex(canonical_bytes(canonical_json(chain)));
}

std::string cvc_hash(const CanonicalVerificationContext& cvc) {
  return crypto::sha256_hex(canonical_serialize(cvc));
}

}  // namespace trustgate
