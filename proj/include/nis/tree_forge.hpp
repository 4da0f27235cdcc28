#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nis/graph.hpp"

namespace nis {

inline constexpr int kMaxTreeOrder = 24;

/// Depths of a rooted tree in preorder: levels[0] = 0 and
/// levels[i] ≤ levels[i−1] + 1.
struct LevelSequence {
  std::vector<int> levels;

  /// Parent of each vertex is the nearest earlier vertex one level up.
  Graph to_graph() const;
  bool operator==(const LevelSequence&) const = default;
};

/// Streams every free tree of order n exactly once, in a fixed order, with
/// constant amortized work per tree. Each tree is produced as the canonical
/// level sequence of the tree rooted at its centroid (Wright, Richmond,
/// Odlyzko and McKay successor rule).
class FreeTreeGenerator {
 public:
  /// Throws LimitError unless 1 ≤ n ≤ 24.
  explicit FreeTreeGenerator(int n);

  /// Current tree.
  LevelSequence levels() const;
  Graph graph() const { return levels().to_graph(); }

  /// Advances; false once the stream is exhausted (current tree unchanged).
  bool next();

 private:
  int n_;
  // 1-based working arrays; level of the root is 1 internally.
  std::vector<int> L_;
  std::vector<int> W_;
  int p_ = 0, q_ = 0, h1_ = 0, h2_ = 0, c_ = 0, r_ = 0;
};

/// Calls visit for each free tree of order n.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> free_trees(int n);

std::uint64_t count_free_trees(int n);

}  // namespace nis
