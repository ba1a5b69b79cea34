// SPDX-License-Identifier: Apache-2.0
#include "trustgate/adapters.hpp"

#include <algorithm>

namespace trustgate {

namespace {

bool is_b64url_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '_';
}

bool is_b64url_segment(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_b64url_char);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Json decode_json_segment(std::string_view segment, const char* what) {
  const auto bytes = crypto::base64url_decode(segment);
  if (!bytes) {
    throw AdapterError(std::string(what) + "_not_base64url");
  }
  Json doc = Json::parse(crypto::to_string(*bytes), nullptr,
                         /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw AdapterError(std::string(what) + "_not_json");
  }
  return doc;
}

std::string require_string(const Json& obj, const char* field,
                           const char* what) {
  if (!obj.contains(field) || !obj[field].is_string() ||
      obj[field].get<std::string>().empty()) {
    throw AdapterError(std::string(what) + "_missing_" + field);
  }
  return obj[field].get<std::string>();
}

std::int64_t require_int(const Json& obj, const char* field,
                         const char* what) {
  if (!obj.contains(field) || !obj[field].is_number_integer()) {
    throw AdapterError(std::string(what) + "_missing_" + field);
  }
  return obj[field].get<std::int64_t>();
}

ClaimValue claim_value(const Json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.get<std::int64_t>();
  throw AdapterError(std::string(what) + "_claim_value_type");
}

ClaimMap claim_map(const Json& obj, const char* what) {
  if (!obj.is_object()) {
    throw AdapterError(std::string(what) + "_claims_not_object");
  }
  ClaimMap out;
  for (const auto& [k, v] : obj.items()) {
    out.emplace(k, claim_value(v, what));
  }
  return out;
}

std::optional<StatusRef> parse_status_ref(const Json& obj, const char* what) {
  if (!obj.contains("status")) return std::nullopt;
  const Json& st = obj["status"];
  if (!st.is_object()) throw AdapterError(std::string(what) + "_status_shape");
  StatusRef ref;
  ref.list_id = require_string(st, "list", what);
  ref.index = require_int(st, "idx", what);
  if (ref.index < 0) throw AdapterError(std::string(what) + "_status_index");
  return ref;
}

Scope parse_scope_array(const Json& arr, const char* what) {
  if (!arr.is_array()) throw AdapterError(std::string(what) + "_scope_shape");
  Scope scope;
  for (const auto& entry : arr) {
    if (!entry.is_string() ||
        !is_valid_permission(entry.get<std::string>())) {
      throw AdapterError(std::string(what) + "_scope_permission");
    }
    scope.permissions.insert(entry.get<std::string>());
  }
  return scope;
}

struct CompactJws {
  Json header;
  Json payload;
  crypto::Bytes signature;
  std::string signed_payload;  // verbatim "b64(header).b64(payload)"
  std::string key_id;
};

CompactJws parse_compact_jws(std::string_view token, const char* what) {
  const auto segments = split(token, '.');
  if (segments.size() != 3 || !is_b64url_segment(segments[0]) ||
      !is_b64url_segment(segments[1]) || !is_b64url_segment(segments[2])) {
    throw AdapterError(std::string(what) + "_not_compact_jws");
  }
  CompactJws jws;
  jws.header = decode_json_segment(segments[0], what);
  jws.payload = decode_json_segment(segments[1], what);
  if (!jws.header.is_object() || !jws.payload.is_object()) {
    throw AdapterError(std::string(what) + "_segment_not_object");
  }
  const std::string alg = require_string(jws.header, "alg", what);
  if (alg != "EdDSA") {
    throw AdapterError(std::string(what) + "_unsupported_alg");
  }
  jws.key_id = require_string(jws.header, "kid", what);
  const auto sig = crypto::base64url_decode(segments[2]);
  if (!sig || sig->size() != crypto::kEd25519SignatureBytes) {
    throw AdapterError(std::string(what) + "_signature_shape");
  }
  jws.signature = *sig;
  jws.signed_payload =
      std::string(segments[0]) + "." + std::string(segments[1]);
  return jws;
}

ProofObject parse_ld_proof(const Json& doc, const char* what) {
  if (!doc.contains("proof") || !doc["proof"].is_object()) {
    throw AdapterError(std::string(what) + "_missing_proof");
  }
  const Json& p = doc["proof"];
  ProofObject proof;
  proof.kind = ProofKind::LD_STUB;
  proof.key_id = require_string(p, "verificationMethod", what);
  const auto sig =
      crypto::base64url_decode(require_string(p, "proofValue", what));
  if (!sig || sig->empty()) {
    throw AdapterError(std::string(what) + "_proof_value");
  }
  // Retained but not cryptographically checked; LD suites sit behind the stub.
  proof.signature = *sig;
  return proof;
}

// DG claim mapping shared by the SD-JWT and LD encodings:
// jti→grant_id, iss→issuer, sub→subject, scope, nbf→not_before,
// exp→not_after, kb→key_binding, status→{list,idx}, cst→constraints.
DelegationGrant grant_from_claims(const Json& claims, const char* what) {
  DelegationGrant dg;
  dg.grant_id = require_string(claims, "jti", what);
  dg.issuer = require_string(claims, "iss", what);
  dg.subject = require_string(claims, "sub", what);
  if (dg.issuer == dg.subject) {
    throw AdapterError(std::string(what) + "_issuer_equals_subject");
  }
  if (!claims.contains("scope")) {
    throw AdapterError(std::string(what) + "_missing_scope");
  }
  dg.scope = parse_scope_array(claims["scope"], what);
  dg.not_before = require_int(claims, "nbf", what);
  dg.not_after = require_int(claims, "exp", what);
  if (dg.not_before > dg.not_after) {
    throw AdapterError(std::string(what) + "_validity_window_inverted");
  }
  dg.key_binding = require_string(claims, "kb", what);
  dg.status_ref = parse_status_ref(claims, what);
  if (claims.contains("cst")) {
    dg.constraints = claim_map(claims["cst"], what);
  }
  static constexpr const char* kKnown[] = {"jti", "iss",    "sub", "scope",
                                           "nbf", "exp",    "kb",  "status",
                                           "cst", "_sd",    "typ", "_sd_alg"};
  for (const auto& [k, v] : claims.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), k) !=
        std::end(kKnown)) {
      continue;
    }
    // Unknown extras stay policy-visible instead of being rejected.
    if (!dg.constraints.emplace(k, claim_value(v, what)).second) {
      throw AdapterError(std::string(what) + "_duplicate_claim");
    }
  }
  return dg;
}

}  // namespace

bool looks_like_compact_jws(std::string_view s) {
  const auto segments = split(s, '.');
  return segments.size() == 3 && is_b64url_segment(segments[0]) &&
         is_b64url_segment(segments[1]) && is_b64url_segment(segments[2]);
}

bool looks_like_sd_jwt(std::string_view s) {
  const auto parts = split(s, '~');
  if (parts.empty() || !looks_like_compact_jws(parts[0])) return false;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    // A trailing '~' leaves one empty tail segment, which is tolerated.
    if (parts[i].empty() && i + 1 == parts.size()) continue;
    if (!is_b64url_segment(parts[i])) return false;
  }
  return true;
}

bool looks_like_vc_ld(const Json& doc) {
  return doc.is_object() && doc.contains("@context") &&
         doc.contains("credentialSubject");
}

std::int64_t raw_artifact_size(const Json& artifact) {
  if (artifact.is_string()) {
    return static_cast<std::int64_t>(artifact.get_ref<const std::string&>().size());
  }
  return static_cast<std::int64_t>(artifact.dump().size());
}

VerificationRequest parse_verification_request(const Json& body) {
  if (!body.is_object()) {
    throw AdapterError("request_not_object");
  }
  VerificationRequest req;
  req.request_id = require_string(body, "request_id", "request");
  if (!body.contains("presentation")) {
    throw AdapterError("request_missing_presentation");
  }
  req.presentation = body["presentation"];
  if (body.contains("chain_tokens")) {
    if (!body["chain_tokens"].is_array()) {
      throw AdapterError("request_chain_tokens_shape");
    }
    for (const auto& t : body["chain_tokens"]) {
      req.chain_tokens.push_back(t);
    }
  }
  req.policy_id = require_string(body, "policy_id", "request");
  if (body.contains("presenter_key_id")) {
    req.presenter_key_id = require_string(body, "presenter_key_id", "request");
  }
  if (body.contains("presenter_signature")) {
    const auto sig = crypto::base64url_decode(
        require_string(body, "presenter_signature", "request"));
    if (!sig) throw AdapterError("request_presenter_signature_encoding");
    req.presenter_signature = *sig;
  }
  return req;
}

Profile detect_profile(const VerificationRequest& request) {
  enum class Kind { JWT, LD };
  Kind presentation_kind;
  if (request.presentation.is_string() &&
      looks_like_compact_jws(
          request.presentation.get_ref<const std::string&>())) {
    presentation_kind = Kind::JWT;
  } else if (looks_like_vc_ld(request.presentation)) {
    presentation_kind = Kind::LD;
  } else {
    throw AdapterError("presentation_shape_unknown");
  }

  bool any_sd = false;
  bool any_ld = false;
  for (const auto& token : request.chain_tokens) {
    if (token.is_string() &&
        looks_like_sd_jwt(token.get_ref<const std::string&>())) {
      any_sd = true;
    } else if (token.is_object()) {
      any_ld = true;
    } else {
      throw AdapterError("chain_token_shape_unknown");
    }
  }

  if (presentation_kind == Kind::JWT && !any_ld) return Profile::FEDERATED;
  if (presentation_kind == Kind::LD && !any_sd) return Profile::SSI;
  return Profile::HYBRID;
}

NormalizedCredential parse_vc_jwt(std::string_view token) {
  const CompactJws jws = parse_compact_jws(token, "vc_jwt");
  const Json& payload = jws.payload;

  NormalizedCredential cred;
  cred.source_format = SourceFormat::VC_JWT;
  cred.issuer = require_string(payload, "iss", "vc_jwt");
  cred.subject = require_string(payload, "sub", "vc_jwt");
  cred.issued_at = require_int(payload, "iat", "vc_jwt");
  cred.expires_at = require_int(payload, "exp", "vc_jwt");
  if (cred.issued_at > cred.expires_at) {
    throw AdapterError("vc_jwt_validity_window_inverted");
  }
  cred.status_ref = parse_status_ref(payload, "vc_jwt");
  if (payload.contains("vc")) {
    cred.claims = claim_map(payload["vc"], "vc_jwt");
  }
  static constexpr const char* kKnown[] = {"iss", "sub", "iat",
                                           "exp", "vc",  "status"};
  for (const auto& [k, v] : payload.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), k) !=
        std::end(kKnown)) {
      continue;
    }
    if (!cred.claims.emplace(k, claim_value(v, "vc_jwt")).second) {
      throw AdapterError("vc_jwt_duplicate_claim");
    }
  }
  cred.proof.kind = ProofKind::JWS_ED25519;
  cred.proof.key_id = jws.key_id;
  cred.proof.signature = jws.signature;
  cred.proof.signed_payload = crypto::to_bytes(jws.signed_payload);
  cred.raw_size_bytes = static_cast<std::int64_t>(token.size());
  return cred;
}

NormalizedCredential parse_vc_ld(const Json& doc) {
  if (!doc.is_object()) {
    throw AdapterError("vc_ld_not_object");
  }
  NormalizedCredential cred;
  cred.source_format = SourceFormat::VC_LD;
  cred.issuer = require_string(doc, "issuer", "vc_ld");

  if (!doc.contains("credentialSubject") ||
      !doc["credentialSubject"].is_object()) {
    throw AdapterError("vc_ld_missing_credentialSubject");
  }
  const Json& subject = doc["credentialSubject"];
  cred.subject = require_string(subject, "id", "vc_ld");
  for (const auto& [k, v] : subject.items()) {
    if (k == "id") continue;
    cred.claims.emplace(k, claim_value(v, "vc_ld"));
  }

  if (!doc.contains("validity") || !doc["validity"].is_object()) {
    throw AdapterError("vc_ld_missing_validity");
  }
  cred.issued_at = require_int(doc["validity"], "from", "vc_ld");
  cred.expires_at = require_int(doc["validity"], "until", "vc_ld");
  if (cred.issued_at > cred.expires_at) {
    throw AdapterError("vc_ld_validity_window_inverted");
  }

  if (doc.contains("credentialStatus")) {
    const Json& st = doc["credentialStatus"];
    if (!st.is_object()) throw AdapterError("vc_ld_status_shape");
    StatusRef ref;
    ref.list_id = require_string(st, "id", "vc_ld");
    ref.index = require_int(st, "statusListIndex", "vc_ld");
    if (ref.index < 0) throw AdapterError("vc_ld_status_index");
    cred.status_ref = ref;
  }

  cred.proof = parse_ld_proof(doc, "vc_ld");
  cred.raw_size_bytes = raw_artifact_size(doc);
  return cred;
}

DelegationGrant parse_dg_sd_jwt(std::string_view token) {
  const auto parts = split(token, '~');
  const CompactJws jws = parse_compact_jws(parts[0], "dg_sd_jwt");
  Json claims = jws.payload;

  std::set<std::string> payload_digests;
  if (claims.contains("_sd")) {
    if (!claims["_sd"].is_array()) {
      throw AdapterError("dg_sd_jwt_sd_shape");
    }
    for (const auto& d : claims["_sd"]) {
      if (!d.is_string()) throw AdapterError("dg_sd_jwt_sd_shape");
      payload_digests.insert(d.get<std::string>());
    }
  }

  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].empty() && i + 1 == parts.size()) continue;  // trailing '~'
    const std::string disclosure(parts[i]);
    const std::string digest = crypto::base64url_encode(
        crypto::sha256(crypto::to_bytes(disclosure)));
    if (payload_digests.find(digest) == payload_digests.end()) {
      throw AdapterError("dg_sd_jwt_disclosure_digest_mismatch");
    }
    const Json decoded = decode_json_segment(disclosure, "dg_sd_jwt_disclosure");
    if (!decoded.is_array() || decoded.size() != 3 ||
        !decoded[0].is_string() || !decoded[1].is_string()) {
      throw AdapterError("dg_sd_jwt_disclosure_shape");
    }
    const std::string name = decoded[1].get<std::string>();
    if (claims.contains(name)) {
      throw AdapterError("dg_sd_jwt_duplicate_claim");
    }
    claims[name] = decoded[2];
  }

  DelegationGrant dg = grant_from_claims(claims, "dg_sd_jwt");
  dg.proof.kind = ProofKind::SD_JWT;
  dg.proof.key_id = jws.key_id;
  dg.proof.signature = jws.signature;
  dg.proof.signed_payload = crypto::to_bytes(jws.signed_payload);
  return dg;
}

DelegationGrant parse_dg_ld(const Json& doc) {
  if (!doc.is_object()) {
    throw AdapterError("dg_ld_not_object");
  }
  DelegationGrant dg = grant_from_claims(doc, "dg_ld");
  dg.proof = parse_ld_proof(doc, "dg_ld");
  return dg;
}

Json extract_vp_token(const Json& envelope) {
  if (!envelope.is_object()) {
    throw AdapterError("oidc4vp_envelope_not_object");
  }
  if (!envelope.contains("vp_token")) {
    throw AdapterError("oidc4vp_missing_vp_token");
  }
  return envelope["vp_token"];
}

}  // namespace trustgate
