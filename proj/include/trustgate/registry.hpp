// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trustgate/canonical.hpp"
#include "trustgate/model.hpp"

namespace trustgate {

struct RegistryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeyRecord {
  std::string key_id;
  std::string controller;
  std::string algorithm;  // only "Ed25519" is accepted in scope
  crypto::Bytes public_key;  // exactly 32 bytes
  bool revoked = false;
};

struct StatusDocument {
  std::string id;
  std::string purpose;  // fixed "revocation"
  crypto::Bytes bits;   // decoded raw bitstring, at least 1 byte
  std::int64_t issued_at = 0;
};

/// Offline, file-backed root of trust. Immutable after load; safe for
/// concurrent reads. Load is fail-closed: any invalid entry rejects the
/// whole registry.
class TrustRegistry {
 public:
  static TrustRegistry load(const std::filesystem::path& file);
  static TrustRegistry from_json(const Json& doc);

  struct KeyLookup {
    enum class State { Active, NotFound, Revoked };
    State state = State::NotFound;
    const KeyRecord* record = nullptr;  // non-null unless NotFound

    bool ok() const { return state == State::Active; }
  };
  KeyLookup resolve_key(std::string_view key_id) const;

  struct StatusLookup {
    enum class State { Ok, UnknownList, IndexOutOfRange };
    State state = State::UnknownList;
    bool revoked = false;  // the bit, MSB-first; true means revoked
    std::int64_t document_issued_at = 0;

    bool ok() const { return state == State::Ok; }
  };
  StatusLookup resolve_status(std::string_view list_id, std::int64_t index) const;

  /// First non-revoked key (by key_id order) controlled by the identifier, or
  /// nullptr.
  const KeyRecord* find_active_key_for_controller(std::string_view controller) const;

  bool is_trust_root(std::string_view controller) const;

  const std::map<std::string, KeyRecord, std::less<>>& keys() const { return keys_; }
  const std::map<std::string, StatusDocument, std::less<>>& status_docs() const {
    return status_docs_;
  }
  const std::set<std::string, std::less<>>& trust_roots() const { return trust_roots_; }

 private:
  std::map<std::string, KeyRecord, std::less<>> keys_;
  std::map<std::string, StatusDocument, std::less<>> status_docs_;
  std::set<std::string, std::less<>> trust_roots_;
};

}  // namespace trustgate
