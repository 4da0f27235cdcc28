#include "nis/oracle.hpp"

#include <stdexcept>

#include "nis/error.hpp"

namespace nis {

namespace {

void check_limit(const Graph& g) {
  if (g.order() > kOracleMaxOrder) {
    throw LimitError("order " + std::to_string(g.order()) + " exceeds oracle limit " +
                     std::to_string(kOracleMaxOrder));
  }
}

int induced_edges(const Graph& g, std::uint64_t subset) {
  int twice = 0;
  for (int v : VertexMask(subset)) twice += (g.neighbors(v) & VertexMask(subset)).count();
  return twice / 2;
}

}  // namespace

std::uint64_t OracleProfile::sigma() const {
  std::uint64_t sum = 0;
  for (auto c : by_size) sum += c;
  return sum;
}

CountPolynomial OracleProfile::polynomial() const {
  std::vector<BigInt> c(by_size.begin(), by_size.end());
  return CountPolynomial(std::move(c));
}

OracleProfile oracle_profile(const Graph& g, int l) {
  check_limit(g);
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  OracleProfile out;
  out.l = l;
  out.by_size.assign(static_cast<std::size_t>(g.order()) + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (induced_edges(g, s) == l) ++out.by_size[VertexMask(s).count()];
  }
  return out;
}

NisSummary oracle_summary(const Graph& g, int l) {
  const auto profile = oracle_profile(g, l);
  BigInt sigma = 0;
  BigInt total = 0;
  for (std::size_t k = 0; k < profile.by_size.size(); ++k) {
    sigma += profile.by_size[k];
    total += BigInt(profile.by_size[k]) * k;
  }
  return NisSummary::from_counts(sigma, total);
}

std::vector<std::vector<std::uint64_t>> oracle_all_levels(const Graph& g) {
  check_limit(g);
  const int n = g.order();
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  std::vector<std::vector<std::uint64_t>> out(
      max_edges + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    ++out[static_cast<std::size_t>(induced_edges(g, s))][VertexMask(s).count()];
  }
  return out;
}

}  // namespace nis
