#include "nis/report.hpp"

#include <algorithm>

#include "nis/claims.hpp"

namespace nis {

namespace {

nlohmann::json witness_json(const WitnessList& w) {
  nlohmann::json codes = nlohmann::json::array();
  for (const auto& c : w.codes()) codes.push_back(c.graph6());
  return {{"count", w.total()}, {"graph6", codes}};
}

bool focuses_on_min(const ScanReport& r) {
  return r.claim_id == kClaimGraphMin || r.claim_id == kClaimTreeMin ||
         r.claim_id == kClaimRatioThird;
}

nlohmann::json optional_fraction(const std::optional<Rational>& v) {
  return v ? nlohmann::json(to_fraction_string(*v)) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"graph6", v.graph6},
                          {"claim", v.claim},
                          {"observed", v.observed},
                          {"kind", std::string(violation_kind_name(v.kind))}});
  }
  const WitnessList& focal =
      focuses_on_min(r) ? r.extremes.min_witnesses() : r.extremes.max_witnesses();
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& c : focal.codes()) witnesses.push_back(c.graph6());
  nlohmann::json j = {
      {"claim_id", r.claim_id},
      {"population", r.population},
      {"order", r.order},
      {"objective", std::string(objective_name(r.objective))},
      {"status", r.passed() ? "pass" : "violation"},
      {"population_size", r.population_size},
      {"extremal", {{"min", optional_fraction(r.extremes.min())},
                    {"max", optional_fraction(r.extremes.max())}}},
      {"witnesses", witnesses},
      {"min_witnesses", witness_json(r.extremes.min_witnesses())},
      {"max_witnesses", witness_json(r.extremes.max_witnesses())},
      {"violations", violations},
      {"notes", r.notes},
  };
  return j;
}

nlohmann::json to_json(const std::vector<ScanReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  std::size_t violating = 0;
  bool blocking = false;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (!r.passed()) ++violating;
    blocking = blocking || r.has_blocking_violation();
  }
  return {{"reports", list},
          {"summary",
           {{"reports", reports.size()},
            {"with_violations", violating},
            {"blocking", blocking}}}};
}

nlohmann::json to_json(const ConjectureRow& row) {
  nlohmann::json top = nlohmann::json::array();
  for (const auto& t : row.top) {
    top.push_back({{"graph6", t.code.graph6()}, {"av1", to_fraction_string(t.value)}});
  }
  return {{"order", row.order},
          {"max_av1", to_fraction_string(row.max_value)},
          {"r_av1", to_fraction_string(row.r_value)},
          {"r_is_unique_max", row.r_is_unique_max},
          {"max_witnesses", witness_json(row.max_witnesses)},
          {"top", top}};
}

std::string summary_line(const ScanReport& r) {
  std::string line = r.passed() ? "PASS " : (r.has_blocking_violation() ? "FAIL " : "NOTE ");
  line += (r.claim_id.empty() ? std::string("scan") : r.claim_id) + " n=" + std::to_string(r.order) +
          " population=" + r.population + " size=" + std::to_string(r.population_size);
  if (r.extremes.min()) line += " min=" + to_fraction_string(*r.extremes.min());
  if (r.extremes.max()) line += " max=" + to_fraction_string(*r.extremes.max());
  if (!r.violations.empty()) {
    line += " violations=" + std::to_string(r.violations.size()) + " [" +
            r.violations.front().claim + ": " + r.violations.front().observed + "]";
  }
  return line;
}

}  // namespace nis
