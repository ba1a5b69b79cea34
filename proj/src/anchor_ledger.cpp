// SPDX-License-Identifier: Apache-2.0
#include "trustgate/anchor_ledger.hpp"

#include <fstream>

namespace trustgate {

std::string_view to_string(AnchorStatus s) {
  return s == AnchorStatus::ACTIVE ? "ACTIVE" : "REVOKED";
}

std::string_view to_string(AnchorState s) {
  switch (s) {
    case AnchorState::ACTIVE: return "ACTIVE";
    case AnchorState::REVOKED: return "REVOKED";
    case AnchorState::EXPIRED: return "EXPIRED";
    case AnchorState::ABSENT: return "ABSENT";
  }
  return "ABSENT";
}

bool is_valid_fingerprint(std::string_view fp) {
  if (fp.size() != 64) return false;
  for (char c : fp) {
    const bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!hex) return false;
  }
  return true;
}

Json AnchorRecord::to_json() const {
  Json out{{"anchored_at", anchored_at},
           {"block_id", block_id},
           {"fingerprint", fingerprint},
           {"status", to_string(status)}};
  if (expires_at) out["expires_at"] = *expires_at;
  return out;
}

namespace {

AnchorRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw LedgerError("ledger record must be an object");
  AnchorRecord rec;
  if (!j.contains("fingerprint") || !j["fingerprint"].is_string()) {
    throw LedgerError("ledger record missing fingerprint");
  }
  rec.fingerprint = j["fingerprint"].get<std::string>();
  if (!is_valid_fingerprint(rec.fingerprint)) {
    throw LedgerError("ledger record has malformed fingerprint");
  }
  if (!j.contains("block_id") || !j["block_id"].is_number_integer()) {
    throw LedgerError("ledger record missing block_id");
  }
  rec.block_id = j["block_id"].get<std::int64_t>();
  if (!j.contains("anchored_at") || !j["anchored_at"].is_number_integer()) {
    throw LedgerError("ledger record missing anchored_at");
  }
  rec.anchored_at = j["anchored_at"].get<std::int64_t>();
  if (j.contains("expires_at")) {
    if (!j["expires_at"].is_number_integer()) {
      throw LedgerError("ledger record expires_at must be an integer");
    }
    rec.expires_at = j["expires_at"].get<std::int64_t>();
  }
  const std::string status = j.value("status", "");
  if (status == "ACTIVE") {
    rec.status = AnchorStatus::ACTIVE;
  } else if (status == "REVOKED") {
    rec.status = AnchorStatus::REVOKED;
  } else {
    throw LedgerError("ledger record has unknown status '" + status + "'");
  }
  return rec;
}

}  // namespace

AnchorStore::AnchorStore(std::filesystem::path file) : path_(std::move(file)) {
  if (!std::filesystem::exists(path_)) {
    std::ofstream create(path_, std::ios::binary | std::ios::app);
    if (!create) {
      throw LedgerError("cannot create ledger file: " + path_.string());
    }
    return;
  }
  std::ifstream in(path_, std::ios::binary);
  if (!in) {
    throw LedgerError("cannot open ledger file: " + path_.string());
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
      throw LedgerError("ledger file contains invalid JSON line");
    }
    AnchorRecord rec = record_from_json(j);
    if (rec.block_id < next_block_id_) {
      throw LedgerError("ledger block_id not strictly increasing");
    }
    next_block_id_ = rec.block_id + 1;
    records_.push_back(std::move(rec));
    last_for_fingerprint_[records_.back().fingerprint] = records_.size() - 1;
  }
}

AnchorRecord AnchorStore::append(AnchorRecord rec) {
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) {
    throw LedgerError("cannot append to ledger file: " + path_.string());
  }
  out << canonical_bytes(rec.to_json()) << '\n';
  out.flush();
  if (!out) {
    throw LedgerError("write to ledger file failed: " + path_.string());
  }
  records_.push_back(rec);
  last_for_fingerprint_[rec.fingerprint] = records_.size() - 1;
  ++next_block_id_;
  return rec;
}

AnchorRecord AnchorStore::anchor(const std::string& fingerprint,
                                 std::int64_t now,
                                 std::optional<std::int64_t> expires_at) {
  if (!is_valid_fingerprint(fingerprint)) {
    throw LedgerError("malformed fingerprint: " + fingerprint);
  }
  std::unique_lock lock(mutex_);
  const auto it = last_for_fingerprint_.find(fingerprint);
  if (it != last_for_fingerprint_.end()) {
    const AnchorRecord& last = records_[it->second];
    // An expired anchor counts as absent for the duplicate check.
    const bool active = last.status == AnchorStatus::ACTIVE &&
                        (!last.expires_at || now <= *last.expires_at);
    if (active) {
      throw DuplicateActiveError(fingerprint);
    }
  }
  AnchorRecord rec;
  rec.fingerprint = fingerprint;
  rec.block_id = next_block_id_;
  rec.anchored_at = now;
  rec.expires_at = expires_at;
  rec.status = AnchorStatus::ACTIVE;
  return append(std::move(rec));
}

AnchorRecord AnchorStore::revoke(const std::string& fingerprint,
                                 std::int64_t now) {
  std::unique_lock lock(mutex_);
  const auto it = last_for_fingerprint_.find(fingerprint);
  if (it == last_for_fingerprint_.end() ||
      records_[it->second].status == AnchorStatus::REVOKED) {
    throw LedgerError("no anchor to revoke for fingerprint: " + fingerprint);
  }
  AnchorRecord rec;
  rec.fingerprint = fingerprint;
  rec.block_id = next_block_id_;
  rec.anchored_at = now;
  rec.status = AnchorStatus::REVOKED;
  return append(std::move(rec));
}

AnchorState AnchorStore::lookup(std::string_view fingerprint,
                                std::int64_t now) const {
  std::shared_lock lock(mutex_);
  const auto it = last_for_fingerprint_.find(fingerprint);
  if (it == last_for_fingerprint_.end()) {
    return AnchorState::ABSENT;
  }
  const AnchorRecord& rec = records_[it->second];
  if (rec.status == AnchorStatus::REVOKED) {
    return AnchorState::REVOKED;
  }
  if (rec.expires_at && now > *rec.expires_at) {
    return AnchorState::EXPIRED;
  }
  return AnchorState::ACTIVE;
}

std::vector<AnchorRecord> AnchorStore::records() const {
  std::shared_lock lock(mutex_);
  return records_;
}

std::size_t AnchorStore::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

}  // namespace trustgate
