// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "trustgate/model.hpp"

namespace trustgate {

/// std::map-backed, so object keys iterate in lexicographic byte order.
using Json = nlohmann::json;

struct EmptyChainError : std::invalid_argument {
  EmptyChainError() : std::invalid_argument("chain is empty") {}
};

Json canonical_json(const ClaimValue& value);
Json canonical_json(const ClaimMap& map);
Json canonical_json(const Scope& scope);
Json canonical_json(const StatusRef& ref);
Json canonical_json(const ProofObject& proof);
Json canonical_json(const NormalizedCredential& cred);
Json canonical_json(const DelegationGrant& grant);
Json canonical_json(std::span<const DelegationGrant> chain);
Json canonical_json(const VerificationPolicy& policy);
Json canonical_json(const StatusContext& status);
Json canonical_json(const CanonicalVerificationContext& cvc);
Json canonical_json(const InvariantFlags& flags);
Json canonical_json(const VerificationResultObject& vro);

/// UTF-8 JSON, keys sorted, no insignificant whitespace, integers in minimal
/// decimal form, binary as unpadded base64url. Rejects floating-point values.
std::string canonical_bytes(const Json& value);

template <class T>
std::string canonical_serialize(const T& value) {
  return canonical_bytes(canonical_json(value));
}

/// Lowercase hex SHA-256 of the canonical serialization of the full DG list,
/// proofs included. Throws EmptyChainError.
std::string chain_fingerprint(std::span<const DelegationGrant> chain);

std::string cvc_hash(const CanonicalVerificationContext& cvc);

}  // namespace trustgate
