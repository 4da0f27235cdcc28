#pragma once

#include <cstdint>
#include <vector>

#include "nis/graph.hpp"
#include "nis/polynomial.hpp"

namespace nis {

inline constexpr int kOracleMaxOrder = 24;

/// by_size[k] = number of k-subsets inducing exactly l edges, k = 0..n.
struct OracleProfile {
  int l = 0;
  std::vector<std::uint64_t> by_size;

  std::uint64_t sigma() const;
  CountPolynomial polynomial() const;
};

/// Brute force over all 2ⁿ subsets. Throws LimitError above n = 24.
OracleProfile oracle_profile(const Graph& g, int l);

NisSummary oracle_summary(const Graph& g, int l);

/// Per-l subset counts for every l at once: result[l][k].
std::vector<std::vector<std::uint64_t>> oracle_all_levels(const Graph& g);

}  // namespace nis
