// SPDX-License-Identifier: Apache-2.0
#include "trustgate/registry.hpp"

#include <fstream>
#include <sstream>

namespace trustgate {

namespace {

std::string require_string(const Json& obj, const char* field,
                           const char* where) {
  if (!obj.contains(field) || !obj[field].is_string()) {
    throw RegistryError(std::string(where) + ": missing string field '" +
                        field + "'");
  }
  return obj[field].get<std::string>();
}

std::int64_t require_int(const Json& obj, const char* field,
                         const char* where) {
  if (!obj.contains(field) || !obj[field].is_number_integer()) {
    throw RegistryError(std::string(where) + ": missing integer field '" +
                        field + "'");
  }
  return obj[field].get<std::int64_t>();
}

}  // namespace

TrustRegistry TrustRegistry::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw RegistryError("cannot open registry file: " + file.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc = Json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw RegistryError("registry file is not valid JSON: " + file.string());
  }
  return from_json(doc);
}

TrustRegistry TrustRegistry::from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw RegistryError("registry document must be a JSON object");
  }
  TrustRegistry reg;

  if (!doc.contains("keys") || !doc["keys"].is_array()) {
    throw RegistryError("registry: missing 'keys' array");
  }
  for (const auto& entry : doc["keys"]) {
    KeyRecord rec;
    rec.key_id = require_string(entry, "key_id", "key record");
    rec.controller = require_string(entry, "controller", "key record");
    rec.algorithm = require_string(entry, "algorithm", "key record");
    if (rec.algorithm != "Ed25519") {
      throw RegistryError("key '" + rec.key_id +
                          "': unsupported algorithm '" + rec.algorithm + "'");
    }
    const auto pk = crypto::base64url_decode(
        require_string(entry, "public_key", "key record"));
    if (!pk || pk->size() != crypto::kEd25519PublicKeyBytes) {
      throw RegistryError("key '" + rec.key_id +
                          "': public_key must decode to exactly 32 bytes");
    }
    rec.public_key = *pk;
    rec.revoked = entry.value("revoked", false);
    if (!reg.keys_.emplace(rec.key_id, rec).second) {
      throw RegistryError("duplicate key_id '" + rec.key_id + "'");
    }
  }

  if (doc.contains("status_docs")) {
    if (!doc["status_docs"].is_array()) {
      throw RegistryError("registry: 'status_docs' must be an array");
    }
    for (const auto& entry : doc["status_docs"]) {
      StatusDocument sd;
      sd.id = require_string(entry, "id", "status document");
      sd.purpose = require_string(entry, "purpose", "status document");
      if (sd.purpose != "revocation") {
        throw RegistryError("status document '" + sd.id +
                            "': purpose must be 'revocation'");
      }
      const auto bits = crypto::base64url_decode(
          require_string(entry, "encoded_list", "status document"));
      if (!bits || bits->empty()) {
        throw RegistryError("status document '" + sd.id +
                            "': encoded_list must decode to at least 1 byte");
      }
      sd.bits = *bits;
      sd.issued_at = require_int(entry, "issued_at", "status document");
      if (!reg.status_docs_.emplace(sd.id, sd).second) {
        throw RegistryError("duplicate status document id '" + sd.id + "'");
      }
    }
  }

  if (doc.contains("trust_roots")) {
    if (!doc["trust_roots"].is_array()) {
      throw RegistryError("registry: 'trust_roots' must be an array");
    }
    for (const auto& entry : doc["trust_roots"]) {
      if (!entry.is_string()) {
        throw RegistryError("registry: trust_roots entries must be strings");
      }
      reg.trust_roots_.insert(entry.get<std::string>());
    }
  }

  for (const auto& root : reg.trust_roots_) {
    if (reg.find_active_key_for_controller(root) == nullptr) {
      throw RegistryError("trust root '" + root +
                          "' controls no non-revoked key");
    }
  }
  return reg;
}

TrustRegistry::KeyLookup TrustRegistry::resolve_key(std::string_view key_id) const {
  const auto it = keys_.find(key_id);
  if (it == keys_.end()) {
    return {KeyLookup::State::NotFound, nullptr};
  }
  if (it->second.revoked) {
    return {KeyLookup::State::Revoked, &it->second};
  }
  return {KeyLookup::State::Active, &it->second};
}

TrustRegistry::StatusLookup TrustRegistry::resolve_status(
    std::string_view list_id, std::int64_t index) const {
  const auto it = status_docs_.find(list_id);
  if (it == status_docs_.end()) {
    return {StatusLookup::State::UnknownList, false, 0};
  }
  const auto& doc = it->second;
  if (index < 0 ||
      static_cast<std::size_t>(index) >= doc.bits.size() * 8) {
    return {StatusLookup::State::IndexOutOfRange, false, doc.issued_at};
  }
  const std::uint8_t byte = doc.bits[static_cast<std::size_t>(index / 8)];
  const bool bit = ((byte >> (7 - (index % 8))) & 1) != 0;
  return {StatusLookup::State::Ok, bit, doc.issued_at};
}

const KeyRecord* TrustRegistry::find_active_key_for_controller(
    std::string_view controller) const {
  for (const auto& [_, rec] : keys_) {
    if (!rec.revoked && rec.controller == controller) {
      return &rec;
    }
  }
  return nullptr;
}

bool TrustRegistry::is_trust_root(std::string_view controller) const {
  return trust_roots_.find(controller) != trust_roots_.end();
}

}  // namespace trustgate
