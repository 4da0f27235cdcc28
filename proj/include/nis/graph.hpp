#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nis {

inline constexpr int kMaxOrder = 64;

/// Subset of a root graph's vertex universe, one bit per vertex.
class VertexMask {
 public:
  constexpr VertexMask() = default;
  constexpr explicit VertexMask(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexMask universe(int n) {
    return VertexMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexMask single(int v) { return VertexMask(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  /// Lowest vertex in the mask; undefined on an empty mask.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexMask other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexMask with(int v) const { return VertexMask(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexMask without(int v) const { return VertexMask(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VertexMask operator|(VertexMask o) const { return VertexMask(bits_ | o.bits_); }
  constexpr VertexMask operator&(VertexMask o) const { return VertexMask(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexMask operator-(VertexMask o) const { return VertexMask(bits_ & ~o.bits_); }
  constexpr VertexMask& operator|=(VertexMask o) { bits_ |= o.bits_; return *this; }
  constexpr VertexMask& operator&=(VertexMask o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const VertexMask&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator old = *this; ++*this; return old; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Immutable simple graph on vertices 0..n-1 stored as adjacency bitsets.
class Graph {
 public:
  /// The graph on zero vertices.
  Graph() = default;

  /// Duplicate edges collapse. Throws std::invalid_argument on loops,
  /// out-of-range endpoints, or n outside 0..64.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph edgeless(int n);
  /// Trusted construction from symmetric, loop-free rows.
  static Graph from_adjacency(std::vector<VertexMask> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexMask universe() const { return VertexMask::universe(order()); }
  VertexMask neighbors(int v) const { return adj_[v]; }
  VertexMask closed_neighbors(int v) const { return adj_[v].with(v); }
  int degree(int v) const { return adj_[v].count(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  /// Edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;
  std::span<const VertexMask> rows() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexMask> adj_;
};

enum class Neighborhood { open, closed };

/// N(u) ∪ N(v), or N[u] ∪ N[v] for Neighborhood::closed.
VertexMask neighborhood_union(const Graph& g, int u, int v, Neighborhood kind);

struct InducedGraph {
  Graph graph;
  /// original[i] is the root vertex that became vertex i.
  std::vector<int> original;
};

/// Subgraph induced by `keep`, relabeled contiguously in increasing order.
InducedGraph induced(const Graph& g, VertexMask keep);

/// Vertex sets of the connected components of g restricted to `within`,
/// ordered by lowest member.
std::vector<VertexMask> components(const Graph& g, VertexMask within);

bool is_connected(const Graph& g);

/// True iff g has an edge and every edge uv has N(u) ∪ N(v) = V.
bool is_good_graph(const Graph& g);

struct DeltaBounds {
  int min_union = 0;  // δ₁
  int max_union = 0;  // δ₂
};

/// Extremes of |N(u) ∪ N(v)| over edges. Throws std::domain_error when
/// g is edgeless.
DeltaBounds delta_bounds(const Graph& g);

struct StructuralProfile {
  bool is_tree = false;
  bool is_connected = false;
  int max_degree = 0;
  bool has_isolated_vertex = false;
  /// Minimum degree over vertices of degree > 1, absent if there are none.
  std::optional<int> min_internal_degree;
};

StructuralProfile structural_predicates(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertex v of g as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

// Text formats.

/// Header-less graph6, n ≤ 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// "n m" followed by m lines "u v".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Order-invariant identifier: the graph6 string of a canonical relabeling.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string graph6) : graph6_(std::move(graph6)) {}

  const std::string& graph6() const { return graph6_; }
  /// The canonical representative itself.
  Graph representative() const { return from_graph6(graph6_); }

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::string graph6_;
};

inline constexpr int kMaxCanonicalOrder = 10;

/// Trees of any order ≤ 62 are canonicalized by rooted-tree encoding at
/// their center; other graphs by permutation minimization, n ≤ 10.
/// Throws LimitError for non-trees above that order.
CanonicalCode canonical_code(const Graph& g);

/// Permutation-minimal code regardless of structure (n ≤ 10).
CanonicalCode canonical_code_by_permutation(const Graph& g);

/// Rooted-at-center canonical relabeling. Throws std::invalid_argument if
/// g is not a tree.
CanonicalCode canonical_tree_code(const Graph& g);

}  // namespace nis
