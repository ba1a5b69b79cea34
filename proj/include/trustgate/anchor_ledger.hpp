// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trustgate/canonical.hpp"

namespace trustgate {

struct LedgerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateActiveError : LedgerError {
  explicit DuplicateActiveError(const std::string& fp)
      : LedgerError("fingerprint already has an active anchor: " + fp) {}
};

enum class AnchorStatus { ACTIVE, REVOKED };

/// Resolved state at lookup time. ABSENT is a state, not an error.
enum class AnchorState { ACTIVE, REVOKED, EXPIRED, ABSENT };

std::string_view to_string(AnchorStatus s);
std::string_view to_string(AnchorState s);

struct AnchorRecord {
  std::string fingerprint;  // 64 lowercase hex chars
  std::int64_t block_id = 0;  // synthetic, strictly increasing in file order
  std::int64_t anchored_at = 0;
  std::optional<std::int64_t> expires_at;
  AnchorStatus status = AnchorStatus::ACTIVE;

  Json to_json() const;
};

/// Append-only JSON-lines store of delegation-chain fingerprints. Records are
/// never rewritten; revocation appends a superseding REVOKED record. Lookup
/// resolves the last record for a fingerprint. Single writer, concurrent
/// readers.
class AnchorStore {
 public:
  /// Opens (creating if absent) and replays the log, validating block_id
  /// monotonicity and fingerprint format.
  explicit AnchorStore(std::filesystem::path file);

  AnchorStore(const AnchorStore&) = delete;
  AnchorStore& operator=(const AnchorStore&) = delete;

  AnchorRecord anchor(const std::string& fingerprint, std::int64_t now,
                      std::optional<std::int64_t> expires_at = std::nullopt);

  /// Appends a superseding REVOKED record. The fingerprint must currently
  /// resolve to ACTIVE or EXPIRED.
  AnchorRecord revoke(const std::string& fingerprint, std::int64_t now);

  AnchorState lookup(std::string_view fingerprint, std::int64_t now) const;

  std::vector<AnchorRecord> records() const;
  std::size_t size() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  AnchorRecord append(AnchorRecord rec);

  std::filesystem::path path_;
  std::vector<AnchorRecord> records_;
  std::map<std::string, std::size_t, std::less<>> last_for_fingerprint_;
  std::int64_t next_block_id_ = 1;
  mutable std::shared_mutex mutex_;
};

bool is_valid_fingerprint(std::string_view fp);

}  // namespace trustgate
