#include <random>
#include <set>

#include "doctest.h"
#include "nis/error.hpp"
#include "nis/families.hpp"
#include "nis/graph.hpp"
#include "oracles.hpp"

using namespace nis;

TEST_CASE("vertex masks") {
  const auto m = VertexMask::universe(5).without(2);
  CHECK(m.count() == 4);
  CHECK(m.first() == 0);
  CHECK_FALSE(m.contains(2));
  std::vector<int> members(m.begin(), m.end());
  CHECK(members == std::vector<int>{0, 1, 3, 4});
  CHECK((m - VertexMask::single(0)).first() == 1);
  CHECK(VertexMask::universe(64).count() == 64);
  CHECK(VertexMask::single(3).subset_of(m));
}

TEST_CASE("construction rejects bad input") {
  const Edge loop[] = {{1, 1}};
  const Edge outside[] = {{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, outside), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(65, {}), std::invalid_argument);
  const Edge twice[] = {{0, 1}, {1, 0}};
  CHECK(Graph::from_edges(2, twice).edge_count() == 1);
}

TEST_CASE("neighborhoods, components and structure") {
  const Graph p4 = build({Family::path, 4});
  CHECK(neighborhood_union(p4, 1, 2, Neighborhood::open).bits() == 0b1111);
  CHECK(neighborhood_union(p4, 0, 1, Neighborhood::open).bits() == 0b0111);
  CHECK(neighborhood_union(p4, 0, 1, Neighborhood::closed).bits() == 0b0111);

  const Graph g = disjoint_union(build({Family::path, 3}), build({Family::cycle, 4}));
  const auto parts = components(g, g.universe());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].bits() == 0b0000111);
  CHECK(parts[1].bits() == 0b1111000);
  CHECK_FALSE(is_connected(g));
  CHECK(components(g, g.universe().without(1)).size() == 3);

  const auto sub = induced(g, VertexMask(0b1011000));
  CHECK(sub.graph.order() == 3);
  CHECK(sub.original == std::vector<int>{3, 4, 6});
  CHECK(sub.graph.edge_count() == 2);

  const auto star = structural_predicates(build({Family::star, 6}));
  CHECK(star.is_tree);
  CHECK(star.max_degree == 5);
  CHECK(star.min_internal_degree == 5);
  CHECK_FALSE(structural_predicates(build({Family::edgeless, 3})).min_internal_degree.has_value());
  CHECK(structural_predicates(build({Family::G_special, 4})).has_isolated_vertex);
}

TEST_CASE("good graphs and delta bounds") {
  CHECK(is_good_graph(build({Family::complete, 5})));
  CHECK(is_good_graph(build({Family::star, 5})));
  CHECK(is_good_graph(build({Family::path, 2})));
  CHECK_FALSE(is_good_graph(build({Family::path, 4})));
  CHECK_FALSE(is_good_graph(build({Family::edgeless, 4})));
  CHECK_FALSE(is_good_graph(build({Family::edgeless, 1})));

  const auto d = delta_bounds(build({Family::path, 5}));
  CHECK(d.min_union == 3);
  CHECK(d.max_union == 4);
  CHECK_THROWS_AS(delta_bounds(build({Family::edgeless, 3})), std::domain_error);
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(Graph()) == "?");
  CHECK(to_graph6(Graph::edgeless(1)) == "@");
  CHECK(to_graph6(build({Family::complete, 2})) == "A_");
  CHECK(to_graph6(build({Family::complete, 4})) == "C~");
  CHECK(to_graph6(build({Family::path, 4})) == "Ch");
  CHECK(from_graph6("D??").edge_count() == 0);
  CHECK(from_graph6("Ch\n") == build({Family::path, 4}));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(17);
  for (int n = 0; n <= 62; ++n) {
    for (double p : {0.1, 0.5, 0.9}) {
      const Graph g = oracle::random_graph(n, p, rng);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
  }
}

TEST_CASE("graph6 errors carry positions") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  try {
    from_graph6("Cx!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(to_graph6(Graph::edgeless(63)), LimitError);
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# P4\n4 3\n0 1\n\n1 2\n2 3\n");
  CHECK(g == build({Family::path, 4}));
  CHECK(parse_edge_list(to_edge_list(g)) == g);

  auto position = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return std::pair<std::size_t, std::size_t>(e.line(), e.column());
    }
    return std::pair<std::size_t, std::size_t>(0, 0);
  };
  CHECK(position("3 1\n0 x\n") == std::pair<std::size_t, std::size_t>(2, 3));
  CHECK(position("3 1\n0 5\n").first == 2);
  CHECK(position("3 2\n0 1\n").first != 0);
  CHECK(position("3 1\n1 1\n").first == 2);
  CHECK(position("").first == 1);
}

TEST_CASE("canonical codes are relabeling invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxCanonicalOrder);
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const auto perm = oracle::random_permutation(n, rng);
    const Graph h = relabel(g, perm);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_code(canonical_code(g).representative()) == canonical_code(g));
  }
  CHECK_THROWS_AS(canonical_code_by_permutation(Graph::edgeless(11)), LimitError);
}

TEST_CASE("canonical codes separate exactly the isomorphism classes, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> brute;
    std::set<CanonicalCode> mine;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      brute.insert(oracle::brute_canonical(g));
      mine.insert(canonical_code(g));
    }
    CHECK(mine.size() == brute.size());
  }
}

TEST_CASE("tree codes work beyond the permutation cap") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 11 + static_cast<int>(rng() % 40);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
    const Graph t = Graph::from_edges(n, edges);
    const Graph u = relabel(t, oracle::random_permutation(n, rng));
    CHECK(canonical_code(t) == canonical_code(u));
    CHECK(oracle::tree_invariant(canonical_code(t).representative()) == oracle::tree_invariant(t));
  }
  CHECK_THROWS_AS(canonical_tree_code(build({Family::cycle, 5})), std::invalid_argument);
}
