#pragma once

#include <set>
#include <string>
#include <vector>

#include "nis/graph.hpp"
#include "nis/scanner.hpp"

namespace nis {

// Claim identifiers, in run order.
inline constexpr const char* kClaimGraphMin = "graph_min_av1";
inline constexpr const char* kClaimGraphMax = "graph_max_av1";
inline constexpr const char* kClaimDeltaSandwich = "delta_sandwich";
inline constexpr const char* kClaimEdgeBracket = "edge_bracket";
inline constexpr const char* kClaimHelpSandwich = "help_sandwich";
inline constexpr const char* kClaimRatioThird = "ratio_one_third";
inline constexpr const char* kClaimTreeMin = "tree_min_av1";
inline constexpr const char* kClaimTreeInternal = "tree_internal_degree_bound";
inline constexpr const char* kClaimTreeUpper = "tree_upper_bound";
inline constexpr const char* kClaimTreeBand = "tree_max_band";
inline constexpr const char* kClaimRClosedForm = "r_closed_form";
inline constexpr const char* kClaimRAboveHalf = "r_above_half";
inline constexpr const char* kClaimConjecture = "conjecture_r_max";

std::vector<std::string> claim_ids();

struct VerifyOptions {
  int max_graph_order = kMaxGraphScanOrder;
  int max_tree_order = 16;
  int max_path_cycle_order = 10;
  int max_r_order = 40;
  /// Empty selects every claim.
  std::set<std::string> claims;
  ScanOptions scan;
  /// Stop after the first claim group with an inequality or route violation.
  bool stop_on_blocking = true;
};

/// One report per claim per order. Equality-case failures are kept as
/// violations of kind equality and never stop the run.
std::vector<ScanReport> verify_claims(const VerifyOptions& options);

/// Every graph of order n with no isolated vertex and maximum degree ≤ 2,
/// one per isomorphism class, as disjoint unions of paths and cycles.
std::vector<Graph> path_cycle_unions(int n);

}  // namespace nis
