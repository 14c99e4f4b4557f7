// Outcome of checking one claim on one instance.
#pragma once

#include <json.hpp>

#include <string>

namespace pact {

enum class ClaimStatus { holds, fails, precondition_unmet, skipped_bounds };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::fails: return "fails";
    case ClaimStatus::precondition_unmet: return "precondition-unmet";
    case ClaimStatus::skipped_bounds: return "skipped-bounds";
  }
  return "?";
}

inline ClaimStatus status_from_string(const std::string& s) {
  if (s == "holds") return ClaimStatus::holds;
  if (s == "fails") return ClaimStatus::fails;
  if (s == "precondition-unmet") return ClaimStatus::precondition_unmet;
  if (s == "skipped-bounds") return ClaimStatus::skipped_bounds;
  throw std::invalid_argument("unknown claim status '" + s + "'");
}

struct ClaimReport {
  std::string claim_id;
  std::string instance_id;
  ClaimStatus status = ClaimStatus::holds;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;
};

}  // namespace pact
