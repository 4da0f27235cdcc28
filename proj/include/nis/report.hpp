#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nis/scanner.hpp"

namespace nis {

/// {claim_id, population, order, objective, status: pass|violation,
///  population_size, extremal: {min, max}, witnesses: [graph6],
///  min_witnesses/max_witnesses: {count, graph6}, violations, notes}.
/// Rationals are lowest-terms "p/q" strings.
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const std::vector<ScanReport>& reports);

nlohmann::json to_json(const ConjectureRow& row);

/// "PASS graph_min_av1 n=5 ..." style one-liner.
std::string summary_line(const ScanReport& report);

}  // namespace nis
