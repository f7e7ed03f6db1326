#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnorm/series.hpp"
#include "gnorm/verify.hpp"

namespace gnorm {

// One line of the scan table. question_margin = nilpotency_class - c_length,
// present exactly when both are.
struct ScanRow {
  std::string name;
  int order = 0;
  std::optional<int> nilpotency_class;
  std::optional<int> c_length;
  std::optional<int> derived_length;
  std::optional<int> question_margin;
};

// JSON builders. Stable keys; absent quantities serialize as null; timings
// are never included.
nlohmann::json profile_json(const GroupProfile& p);
nlohmann::json claim_json(const ClaimResult& r);

// Top-level schema: { "group": {"name", "order"},
//                     "series": {"c", "upper_central", "lower_central", "derived"},
//                     "profile": {...}, "claims": [...] }.
nlohmann::json report_json(const std::string& name, int order, const std::vector<int>& c_orders,
                           const std::vector<int>& upper_orders,
                           const std::vector<int>& lower_orders,
                           const std::vector<int>& derived_orders, const GroupProfile& p,
                           const std::vector<ClaimResult>& claims);
nlohmann::json report_json(const VerificationReport& rep);

nlohmann::json scan_row_json(const ScanRow& row);

ScanRow make_scan_row(const std::string& name, int order, const GroupProfile& p);

}  // namespace gnorm
