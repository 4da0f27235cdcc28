#include "nis/families.hpp"

#include <stdexcept>

#include "nis/engine.hpp"

namespace nis {

namespace {

struct PathCounts {
  std::vector<BigInt> sigma0;  // σ₀(P_m), m = 0..n
  std::vector<BigInt> total0;  // S₀(P_m)
};

// σ₀(P_m) = σ₀(P_{m−1}) + σ₀(P_{m−2}) and
// S₀(P_m) = S₀(P_{m−1}) + σ₀(P_{m−2}) + S₀(P_{m−2}), splitting on an end vertex.
PathCounts path_counts(int n) {
  PathCounts c;
  c.sigma0 = {1, 2};
  c.total0 = {0, 1};
  for (int m = 2; m <= n; ++m) {
    c.sigma0.push_back(c.sigma0[m - 1] + c.sigma0[m - 2]);
    c.total0.push_back(c.total0[m - 1] + c.sigma0[m - 2] + c.total0[m - 2]);
  }
  return c;
}

NisSummary path_summary(int n, int l) {
  const PathCounts c = path_counts(std::max(n, 1));
  if (l == 0) return NisSummary::from_counts(c.sigma0[n], c.total0[n]);
  // Edge v_{j−1}v_j leaves P_{j−2} on the left and P_{n−2−j} on the right.
  BigInt sigma = 0;
  BigInt total = 0;
  for (int j = 1; j <= n - 1; ++j) {
    const int left = std::max(j - 2, 0);
    const int right = std::max(n - 2 - j, 0);
    const BigInt s0 = c.sigma0[left] * c.sigma0[right];
    const BigInt t0 = c.total0[left] * c.sigma0[right] + c.sigma0[left] * c.total0[right];
    sigma += s0;
    total += 2 * s0 + t0;
  }
  return NisSummary::from_counts(sigma, total);
}

// σ₀ and S₀ of the star S_m, m ≥ 1.
std::pair<BigInt, BigInt> star_level0(int m) {
  if (m == 1) return {BigInt(2), BigInt(1)};
  return {pow2(m - 1) + 1, BigInt(m - 1) * pow2(m - 2) + 1};
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::edgeless: return "edgeless";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::R: return "R";
    case Family::G_special: return "G_special";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  if (name == "G") return Family::G_special;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

int family_min_order(Family f) {
  switch (f) {
    case Family::edgeless: return 0;
    case Family::star: return 1;
    case Family::complete: return 0;
    case Family::path: return 0;
    case Family::cycle: return 3;
    case Family::R: return 4;
    case Family::G_special: return 3;
  }
  return 0;
}

std::vector<Family> all_families() {
  return {Family::edgeless, Family::star,  Family::complete, Family::path,
          Family::cycle,    Family::R,     Family::G_special};
}

Graph build(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < family_min_order(spec.family) || n > kMaxOrder) {
    throw std::invalid_argument(std::string(family_name(spec.family)) + " needs order in " +
                                std::to_string(family_min_order(spec.family)) + ".." +
                                std::to_string(kMaxOrder) + ", got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::edgeless:
      break;
    case Family::star:
      for (int v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case Family::complete:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      break;
    case Family::path:
      for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
      break;
    case Family::cycle:
      for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
      edges.push_back({n - 1, 0});
      break;
    case Family::R:
      for (int v = 1; v <= n - 2; ++v) edges.push_back({0, v});
      edges.push_back({n - 2, n - 1});
      break;
    case Family::G_special:
      edges.push_back({0, 1});
      break;
  }
  return Graph::from_edges(n, edges);
}

NisSummary closed_form_summary(const FamilySpec& spec, int l) {
  if (l != 0 && l != 1) throw std::invalid_argument("closed forms exist for l = 0 and l = 1 only");
  const int n = spec.n;
  if (n < family_min_order(spec.family)) {
    throw std::invalid_argument(std::string(family_name(spec.family)) + " below minimum order");
  }
  switch (spec.family) {
    case Family::edgeless:
      if (l == 1) return NisSummary::from_counts(0, 0);
      return NisSummary::from_counts(pow2(n), n == 0 ? BigInt(0) : BigInt(n) * pow2(n - 1));
    case Family::star:
      if (l == 1) return NisSummary::from_counts(n - 1, 2 * (n - 1));
      {
        auto [sigma, total] = star_level0(n);
        return NisSummary::from_counts(sigma, total);
      }
    case Family::complete:
      if (l == 1) return NisSummary::from_counts(BigInt(n) * (n - 1) / 2, BigInt(n) * (n - 1));
      return NisSummary::from_counts(n + 1, n);
    case Family::path:
      return path_summary(n, l);
    case Family::R:
      if (l == 1) {
        return NisSummary::from_counts(BigInt(2 * n - 5) + pow2(n - 3),
                                       BigInt(5 * n - 13) + BigInt(n + 1) * pow2(n - 4));
      }
      {
        // split on the far leaf: R_n − leaf = S_{n−1}, R_n − N[leaf] = S_{n−2}
        auto [s_big, t_big] = star_level0(n - 1);
        auto [s_small, t_small] = star_level0(n - 2);
        return NisSummary::from_counts(s_big + s_small, t_big + s_small + t_small);
      }
    case Family::G_special:
      if (l == 1) {
        return NisSummary::from_counts(pow2(n - 2), 2 * pow2(n - 2) + BigInt(n - 2) * pow2(n - 2) / 2);
      }
      return NisSummary::from_counts(3 * pow2(n - 2),
                                     2 * pow2(n - 2) + 3 * BigInt(n - 2) * pow2(n - 2) / 2);
    case Family::cycle:
      break;
  }
  throw std::invalid_argument("no closed form for family " +
                              std::string(family_name(spec.family)));
}

Rational r_family_av1(int n) {
  if (n < 4) throw std::invalid_argument("R_n needs n >= 4");
  return Rational(BigInt(5 * n - 13) + BigInt(n + 1) * pow2(n - 4),
                  BigInt(2 * n - 5) + pow2(n - 3));
}

std::vector<RatioRow> ratio_table() {
  struct Entry {
    const char* name;
    FamilySpec spec;
    Rational value;
  };
  const Entry entries[] = {
      {"P5", {Family::path, 5}, Rational(10, 13)}, {"C4", {Family::cycle, 4}, Rational(4, 7)},
      {"P4", {Family::path, 4}, Rational(5, 8)},   {"C3", {Family::cycle, 3}, Rational(3, 4)},
      {"P3", {Family::path, 3}, Rational(2, 5)},   {"P2", {Family::path, 2}, Rational(1, 3)},
  };
  std::vector<RatioRow> rows;
  for (const auto& e : entries) {
    Graph g = build(e.spec);
    rows.push_back({e.name, g, sigma_ratio(g), e.value});
  }
  return rows;
}

}  // namespace nis
