#include <set>

#include "doctest.h"
#include "nis/error.hpp"
#include "nis/tree_forge.hpp"
#include "oracles.hpp"

using namespace nis;

namespace {

// OEIS A000055, n = 1..24
const std::uint64_t kFreeTrees[] = {1,     1,      1,      2,      3,       6,       11,      23,
                                    47,    106,    235,    551,    1301,    3159,    7741,    19320,
                                    48629, 123867, 317955, 823065, 2144505, 5623756, 14828074, 39299897};

}  // namespace

TEST_CASE("level sequences") {
  const LevelSequence star{{0, 1, 1, 1}};
  const Graph g = star.to_graph();
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 3);
  const LevelSequence path{{0, 1, 2, 1}};
  CHECK(path.to_graph().degree_sequence() == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("generator bounds") {
  CHECK_THROWS_AS(FreeTreeGenerator(0), LimitError);
  CHECK_THROWS_AS(FreeTreeGenerator(25), LimitError);
  FreeTreeGenerator one(1);
  CHECK(one.graph().order() == 1);
  CHECK_FALSE(one.next());
  CHECK(one.graph().order() == 1);
}

TEST_CASE("counts match the known sequence") {
  for (int n = 1; n <= 19; ++n) {
    CAPTURE(n);
    CHECK(count_free_trees(n) == kFreeTrees[n - 1]);
  }
}

TEST_CASE("every emitted tree is a distinct valid tree") {
  for (int n = 1; n <= 13; ++n) {
    std::set<std::string> seen;
    std::size_t produced = 0;
    for_each_free_tree(n, [&](const Graph& t) {
      ++produced;
      CHECK(t.order() == n);
      CHECK(structural_predicates(t).is_tree);
      seen.insert(oracle::tree_invariant(t));
    });
    CHECK(seen.size() == produced);
    CHECK(produced == kFreeTrees[n - 1]);
  }
}

TEST_CASE("level sequences are valid preorders") {
  FreeTreeGenerator gen(9);
  do {
    const auto seq = gen.levels().levels;
    REQUIRE(seq.size() == 9);
    CHECK(seq[0] == 0);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      CHECK(seq[i] >= 1);
      CHECK(seq[i] <= seq[i - 1] + 1);
    }
  } while (gen.next());
}

TEST_CASE("stream is deterministic") {
  const auto a = free_trees(11);
  const auto b = free_trees(11);
  CHECK(a == b);
}

TEST_CASE("Pruefer enumeration agrees for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(oracle::pruefer_free_tree_count(n) == count_free_trees(n));
  }
}
