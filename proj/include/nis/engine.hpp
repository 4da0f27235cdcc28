#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nis/graph.hpp"
#include "nis/polynomial.hpp"

namespace nis {

/// Contribution of one edge uv to the 1-nearly independent sets: those sets
/// are {u, v} plus an independent set of the residual G − (N(u) ∪ N(v)).
struct EdgeTerm {
  Edge edge;
  VertexMask residual;
  BigInt sigma0;  // σ₀ of the residual
  BigInt total0;  // S₀ of the residual
  Rational weight;

  // Quantities that bound σ₀(residual)/σ₀(G) from both sides.
  int union_size = 0;  // |N(u) ∪ N(v)|
  int closed_u = 0;    // |N[u]|
  int closed_v = 0;    // |N[v]|
  BigInt sigma0_without_u;
  BigInt sigma0_without_v;

  Rational residual_average() const {
    return sigma0 == 0 ? Rational(0) : Rational(total0, sigma0);
  }
};

/// Memoized exact evaluator bound to one root graph. Every query takes a
/// vertex mask naming an induced subgraph of the root; the default is the
/// whole graph. Not thread-safe: use one engine per worker.
///
/// Masks are split into connected components first, which are combined with
/// the disjoint-union product rules. A connected mask recurses on the vertex
/// of maximum degree inside it (lowest index on ties).
class NisEngine {
 public:
  explicit NisEngine(Graph root);

  const Graph& graph() const { return root_; }

  /// I₀ by σ₀(G) = σ₀(G−v) + σ₀(G−N[v]) lifted to polynomials.
  const CountPolynomial& i0(VertexMask mask);
  const CountPolynomial& i0() { return i0(root_.universe()); }

  /// I₁ by vertex deletion at the pivot.
  const CountPolynomial& i1_vertex_recursion(VertexMask mask);
  const CountPolynomial& i1_vertex_recursion() { return i1_vertex_recursion(root_.universe()); }

  /// I₁ = x² Σ_{uv ∈ E} I₀(G − (N(u) ∪ N(v))).
  CountPolynomial i1_edge_decomposition(VertexMask mask);
  CountPolynomial i1_edge_decomposition() { return i1_edge_decomposition(root_.universe()); }

  /// σ₀, S₀, σ₁, S₁ by the scalar recursions only; shares no cache with the
  /// polynomial routes.
  const ScalarCounts& scalar_counts(VertexMask mask);
  const ScalarCounts& scalar_counts() { return scalar_counts(root_.universe()); }

  NisSummary s1_vertex_recursion() { return scalar_counts().summary1(); }
  NisSummary summary0() { return summarize(i0()); }
  NisSummary summary1() { return summarize(i1_vertex_recursion()); }

  /// 2 + av₀(G − (N(u) ∪ N(v))). Throws std::invalid_argument for non-edges.
  Rational av1_edge(Edge e);

  /// One term per edge in lexicographic edge order. Throws std::domain_error
  /// on an edgeless root.
  std::vector<EdgeTerm> edge_terms();

  std::size_t cache_size() const { return i0_cache_.size() + i1_cache_.size() + scalar_cache_.size(); }

 private:
  int pivot(VertexMask mask) const;
  VertexMask edge_residual(VertexMask mask, int u, int v) const;

  Graph root_;
  std::unordered_map<std::uint64_t, CountPolynomial> i0_cache_;
  std::unordered_map<std::uint64_t, CountPolynomial> i1_cache_;
  std::unordered_map<std::uint64_t, ScalarCounts> scalar_cache_;
};

// One-shot helpers on whole graphs.
CountPolynomial i0_polynomial(const Graph& g);
CountPolynomial i1_vertex_recursion(const Graph& g);
CountPolynomial i1_edge_decomposition(const Graph& g);
NisSummary s1_vertex_recursion(const Graph& g);
Rational av1_edge(const Graph& g, Edge e);
std::vector<EdgeTerm> edge_terms(const Graph& g);

/// σ₁(G)/σ₀(G).
Rational sigma_ratio(const Graph& g);

}  // namespace nis
