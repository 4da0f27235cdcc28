#include <random>

#include "doctest.h"
#include "nis/error.hpp"
#include "nis/families.hpp"
#include "nis/oracle.hpp"
#include "oracles.hpp"

using namespace nis;

TEST_CASE("small hand counts") {
  // P4: independent sets {}, 4 singletons, {0,2},{0,3},{1,3}
  const auto p4 = oracle_profile(build({Family::path, 4}), 0);
  CHECK(p4.by_size == std::vector<std::uint64_t>{1, 4, 3, 0, 0});
  CHECK(oracle_summary(build({Family::path, 4}), 1).average == Rational(12, 5));
  const auto k3 = oracle_profile(build({Family::complete, 3}), 3);
  CHECK(k3.by_size == std::vector<std::uint64_t>{0, 0, 0, 1});
  CHECK(oracle_summary(build({Family::edgeless, 5}), 1).sigma == 0);
  CHECK(oracle_summary(build({Family::edgeless, 5}), 1).average == 0);
}

TEST_CASE("agrees with an independent brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    auto expected = oracle::subset_counts(g);
    const auto all = oracle_all_levels(g);
    // levels above |E| are empty
    REQUIRE(all.size() >= expected.size());
    expected.resize(all.size(), std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t l = 0; l < expected.size(); ++l) {
      CHECK(all[l] == expected[l]);
      if (l <= 3) CHECK(oracle_profile(g, static_cast<int>(l)).by_size == expected[l]);
    }
  }
}

TEST_CASE("levels partition the power set") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 14; ++n) {
    const Graph g = oracle::random_graph(n, 0.5, rng);
    std::uint64_t sum = 0;
    for (const auto& level : oracle_all_levels(g))
      for (auto c : level) sum += c;
    CHECK(sum == (std::uint64_t{1} << n));
  }
}

TEST_CASE("polynomial view") {
  const auto profile = oracle_profile(build({Family::star, 4}), 1);
  const auto p = profile.polynomial();
  CHECK(p.at_one() == profile.sigma());
  CHECK(p.at_one() == 3);
  CHECK(p.derivative_at_one() == 6);
  CHECK(oracle_profile(build({Family::edgeless, 2}), 2).by_size == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(oracle_profile(Graph::edgeless(25), 0), LimitError);
  CHECK_NOTHROW(oracle_profile(Graph::edgeless(kOracleMaxOrder), 0));
}
