#include "doctest.h"
#include "nis/engine.hpp"
#include "nis/families.hpp"
#include "oracles.hpp"

using namespace nis;

namespace {

NisSummary brute_summary(const Graph& g, int l) {
  const auto counts = oracle::subset_counts(g);
  BigInt sigma = 0, total = 0;
  if (static_cast<std::size_t>(l) < counts.size()) {
    for (std::size_t k = 0; k < counts[l].size(); ++k) {
      sigma += counts[l][k];
      total += BigInt(counts[l][k]) * k;
    }
  }
  return NisSummary::from_counts(sigma, total);
}

// σ₁(Rₙ) and S₁(Rₙ) written out directly
Rational r_reference(int n) {
  const BigInt sigma = 2 * n - 5 + pow2(n - 3);
  const BigInt total = 5 * n - 13 + (n + 1) * pow2(n - 4);
  return Rational(total, sigma);
}

}  // namespace

TEST_CASE("names round trip") {
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("G") == Family::G_special);
  CHECK_THROWS_AS(parse_family("wheel"), std::invalid_argument);
  CHECK_THROWS_AS(build({Family::R, 3}), std::invalid_argument);
  CHECK_THROWS_AS(build({Family::cycle, 2}), std::invalid_argument);
}

TEST_CASE("R and G shapes") {
  const Graph r = build({Family::R, 7});
  CHECK(r.edge_count() == 6);
  CHECK(r.degree(0) == 5);
  CHECK(r.adjacent(5, 6));
  CHECK(r.degree(6) == 1);
  const Graph g = build({Family::G_special, 6});
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
}

TEST_CASE("closed forms match brute force") {
  for (Family f : all_families()) {
    if (f == Family::cycle) continue;
    for (int n = std::max(1, family_min_order(f)); n <= 14; ++n) {
      for (int l : {0, 1}) {
        const FamilySpec spec{f, n};
        CAPTURE(family_name(f));
        CAPTURE(n);
        CAPTURE(l);
        CHECK(closed_form_summary(spec, l) == brute_summary(build(spec), l));
      }
    }
  }
  CHECK_THROWS_AS(closed_form_summary({Family::cycle, 5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_summary({Family::path, 5}, 2), std::invalid_argument);
}

TEST_CASE("closed forms match the engine up to order 40") {
  for (Family f : all_families()) {
    if (f == Family::cycle) continue;
    for (int n = std::max(1, family_min_order(f)); n <= 40; ++n) {
      const FamilySpec spec{f, n};
      NisEngine e(build(spec));
      CHECK(closed_form_summary(spec, 0) == e.summary0());
      CHECK(closed_form_summary(spec, 1) == e.s1_vertex_recursion());
    }
  }
}

TEST_CASE("star and complete graph counts") {
  for (int n = 2; n <= 20; ++n) {
    const auto star = closed_form_summary({Family::star, n}, 1);
    CHECK(star.sigma == n - 1);
    CHECK(star.total == 2 * (n - 1));
    const auto k = closed_form_summary({Family::complete, n}, 1);
    CHECK(k.sigma == n * (n - 1) / 2);
    CHECK(k.total == n * (n - 1));
  }
}

TEST_CASE("R_n values") {
  CHECK(r_family_av1(10) == Rational(741, 143));
  CHECK(r_family_av1(6) == 3);
  CHECK(r_family_av1(7) == Rational(86, 25));
  CHECK(r_family_av1(8) == Rational(171, 43));
  for (int n = 4; n <= 40; ++n) {
    CHECK(r_family_av1(n) == r_reference(n));
    CHECK(s1_vertex_recursion(build({Family::R, n})).average == r_reference(n));
  }
}

TEST_CASE("gap below (n+1)/2 for R_n") {
  auto gap = [](int n) { return Rational(n + 1, 2) - r_family_av1(n); };
  // rises up to n = 7, then falls
  for (int n = 4; n < 7; ++n) CHECK(gap(n) < gap(n + 1));
  for (int n = 7; n < 40; ++n) CHECK(gap(n + 1) < gap(n));
  CHECK(gap(16) > Rational(1, 100));
  CHECK(gap(17) > Rational(1, 100));
  for (int n = 18; n <= 40; ++n) CHECK(gap(n) < Rational(1, 100));
  for (int n = 4; n <= 40; ++n) CHECK(gap(n) > 0);
}

TEST_CASE("G_n average") {
  for (int n = 3; n <= 20; ++n) {
    CHECK(closed_form_summary({Family::G_special, n}, 1).average == Rational(n, 2) + 1);
    CHECK(s1_vertex_recursion(build({Family::G_special, n})).average == Rational(n, 2) + 1);
  }
}

TEST_CASE("ratio table") {
  const auto rows = ratio_table();
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CAPTURE(row.name);
    CHECK(row.engine_value == row.reference_value);
    CHECK(brute_summary(row.graph, 1).sigma * denominator(row.reference_value) ==
          brute_summary(row.graph, 0).sigma * numerator(row.reference_value));
  }
  CHECK(rows[0].reference_value == Rational(10, 13));
  CHECK(rows[1].reference_value == Rational(4, 7));
  CHECK(rows[5].reference_value == Rational(1, 3));
}
