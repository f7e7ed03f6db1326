#include "gnorm/report.hpp"

namespace gnorm {

namespace {

using nlohmann::json;

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(); }

}  // namespace

json profile_json(const GroupProfile& p) {
  return json{{"is_nilpotent", p.is_nilpotent},
              {"nilpotency_class", opt_int(p.nilpotency_class)},
              {"is_soluble", p.is_soluble},
              {"derived_length", opt_int(p.derived_length)},
              {"c_length", opt_int(p.c_length)},
              {"is_baer", p.is_baer}};
}

json claim_json(const ClaimResult& r) {
  json j{{"id", r.claim_id},
         {"status", std::string(claim_status_name(r.status))},
         {"witness", r.witness}};
  if (!r.mode.empty()) j["mode"] = r.mode;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json report_json(const std::string& name, int order, const std::vector<int>& c_orders,
                 const std::vector<int>& upper_orders, const std::vector<int>& lower_orders,
                 const std::vector<int>& derived_orders, const GroupProfile& p,
                 const std::vector<ClaimResult>& claims) {
  json claims_json = json::array();
  for (const ClaimResult& r : claims) claims_json.push_back(claim_json(r));
  return json{{"group", json{{"name", name}, {"order", order}}},
              {"series", json{{"c", c_orders},
                              {"upper_central", upper_orders},
                              {"lower_central", lower_orders},
                              {"derived", derived_orders}}},
              {"profile", profile_json(p)},
              {"claims", std::move(claims_json)}};
}

json report_json(const VerificationReport& rep) {
  return report_json(rep.group_name, rep.group_order, rep.c_orders, rep.upper_central_orders,
                     rep.lower_central_orders, rep.derived_orders, rep.profile, rep.results);
}

json scan_row_json(const ScanRow& row) {
  return json{{"name", row.name},
              {"order", row.order},
              {"nilpotency_class", opt_int(row.nilpotency_class)},
              {"c_length", opt_int(row.c_length)},
              {"derived_length", opt_int(row.derived_length)},
              {"question_margin", opt_int(row.question_margin)}};
}

ScanRow make_scan_row(const std::string& name, int order, const GroupProfile& p) {
  ScanRow row;
  row.name = name;
  row.order = order;
  row.nilpotency_class = p.nilpotency_class;
  row.c_length = p.c_length;
  row.derived_length = p.derived_length;
  if (p.nilpotency_class && p.c_length) {
    row.question_margin = *p.nilpotency_class - *p.c_length;
  }
  return row;
}

}  // namespace gnorm
