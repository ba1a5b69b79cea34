// SPDX-License-Identifier: Apache-2.0
#include "trustgate/model.hpp"

#include <algorithm>

namespace trustgate {

std::string_view to_string(SourceFormat v) {
  switch (v) {
    case SourceFormat::VC_JWT: return "VC_JWT";
    case SourceFormat::VC_LD: return "VC_LD";
  }
  return "VC_JWT";
}

std::string_view to_string(ProofKind v) {
  switch (v) {
    case ProofKind::JWS_ED25519: return "JWS_ED25519";
    case ProofKind::SD_JWT: return "SD_JWT";
    case ProofKind::LD_STUB: return "LD_STUB";
  }
  return "JWS_ED25519";
}

std::string_view to_string(Profile v) {
  switch (v) {
    case Profile::FEDERATED: return "FEDERATED";
    case Profile::SSI: return "SSI";
    case Profile::HYBRID: return "HYBRID";
  }
  return "FEDERATED";
}

std::string_view to_string(ResultCode v) {
  switch (v) {
    case ResultCode::OK: return "OK";
    case ResultCode::E100: return "E100";
    case ResultCode::E200: return "E200";
    case ResultCode::E300: return "E300";
    case ResultCode::E400: return "E400";
    case ResultCode::E500: return "E500";
  }
  return "OK";
}

std::optional<SourceFormat> source_format_from_string(std::string_view s) {
  if (s == "VC_JWT") return SourceFormat::VC_JWT;
  if (s == "VC_LD") return SourceFormat::VC_LD;
  return std::nullopt;
}

std::optional<ProofKind> proof_kind_from_string(std::string_view s) {
  if (s == "JWS_ED25519") return ProofKind::JWS_ED25519;
  if (s == "SD_JWT") return ProofKind::SD_JWT;
  if (s == "LD_STUB") return ProofKind::LD_STUB;
  return std::nullopt;
}

std::optional<ResultCode> result_code_from_string(std::string_view s) {
  if (s == "OK") return ResultCode::OK;
  if (s == "E100") return ResultCode::E100;
  if (s == "E200") return ResultCode::E200;
  if (s == "E300") return ResultCode::E300;
  if (s == "E400") return ResultCode::E400;
  if (s == "E500") return ResultCode::E500;
  return std::nullopt;
}

namespace {

bool is_token_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
         c == '_' || c == '.';
}

}  // namespace

bool is_valid_permission(std::string_view permission) {
  const auto colon = permission.find(':');
  if (colon == std::string_view::npos || colon == 0 ||
      colon == permission.size() - 1) {
    return false;
  }
  if (permission.find(':', colon + 1) != std::string_view::npos) {
    return false;
  }
  return std::all_of(permission.begin(), permission.begin() + colon,
                     is_token_char) &&
         std::all_of(permission.begin() + colon + 1, permission.end(),
                     is_token_char);
}

bool is_valid_scope(const Scope& scope) {
  return std::all_of(scope.permissions.begin(), scope.permissions.end(),
                     [](const std::string& p) { return is_valid_permission(p); });
}

bool scope_contains(const Scope& parent, const Scope& child) {
  return std::includes(parent.permissions.begin(), parent.permissions.end(),
                       child.permissions.begin(), child.permissions.end());
}

}  // namespace trustgate
