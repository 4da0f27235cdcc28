#include "nis/engine.hpp"

#include <stdexcept>

namespace nis {

NisEngine::NisEngine(Graph root) : root_(std::move(root)) {}

int NisEngine::pivot(VertexMask mask) const {
  int best = -1;
  int best_degree = -1;
  for (int v : mask) {
    const int d = (root_.neighbors(v) & mask).count();
    if (d > best_degree) {
      best = v;
      best_degree = d;
    }
  }
  return best;
}

VertexMask NisEngine::edge_residual(VertexMask mask, int u, int v) const {
  return mask - (root_.neighbors(u) | root_.neighbors(v));
}

const CountPolynomial& NisEngine::i0(VertexMask mask) {
  if (auto it = i0_cache_.find(mask.bits()); it != i0_cache_.end()) return it->second;
  CountPolynomial result;
  if (mask.empty()) {
    result = CountPolynomial::one();
  } else if (const auto parts = components(root_, mask); parts.size() > 1) {
    result = CountPolynomial::one();
    for (VertexMask part : parts) result = result * i0(part);
  } else {
    const int v = pivot(mask);
    result = i0(mask.without(v));
    result += i0(mask - root_.closed_neighbors(v)).shifted(1);
  }
  return i0_cache_.emplace(mask.bits(), std::move(result)).first->second;
}

const CountPolynomial& NisEngine::i1_vertex_recursion(VertexMask mask) {
  if (auto it = i1_cache_.find(mask.bits()); it != i1_cache_.end()) return it->second;
  CountPolynomial result;
  if (mask.empty()) {
    // zero polynomial
  } else if (const auto parts = components(root_, mask); parts.size() > 1) {
    PolynomialPair acc{CountPolynomial::one(), CountPolynomial()};
    for (VertexMask part : parts) {
      PolynomialPair piece{i0(part), i1_vertex_recursion(part)};
      acc = union_combine(acc, piece);
    }
    result = std::move(acc.i1);
  } else {
    const int v = pivot(mask);
    result = i1_vertex_recursion(mask.without(v));
    result += i1_vertex_recursion(mask - root_.closed_neighbors(v)).shifted(1);
    CountPolynomial through_v;
    for (int u : root_.neighbors(v) & mask) through_v += i0(edge_residual(mask, u, v));
    result += through_v.shifted(2);
  }
  return i1_cache_.emplace(mask.bits(), std::move(result)).first->second;
}

CountPolynomial NisEngine::i1_edge_decomposition(VertexMask mask) {
  CountPolynomial sum;
  for (int u : mask) {
    for (int v : root_.neighbors(u) & mask) {
      if (v > u) sum += i0(edge_residual(mask, u, v));
    }
  }
  return sum.shifted(2);
}

const ScalarCounts& NisEngine::scalar_counts(VertexMask mask) {
  if (auto it = scalar_cache_.find(mask.bits()); it != scalar_cache_.end()) return it->second;
  ScalarCounts result;
  if (mask.empty()) {
    // σ₀ = 1 from the empty set, everything else 0
  } else if (const auto parts = components(root_, mask); parts.size() > 1) {
    for (VertexMask part : parts) result = union_combine(result, ScalarCounts(scalar_counts(part)));
  } else {
    const int v = pivot(mask);
    const ScalarCounts without_v = scalar_counts(mask.without(v));
    const ScalarCounts without_closed = scalar_counts(mask - root_.closed_neighbors(v));
    result.sigma0 = without_v.sigma0 + without_closed.sigma0;
    result.total0 = without_v.total0 + without_closed.sigma0 + without_closed.total0;
    result.sigma1 = without_v.sigma1 + without_closed.sigma1;
    result.total1 = without_v.total1 + without_closed.sigma1 + without_closed.total1;
    for (int u : root_.neighbors(v) & mask) {
      const ScalarCounts h = scalar_counts(edge_residual(mask, u, v));
      result.sigma1 += h.sigma0;
      result.total1 += 2 * h.sigma0 + h.total0;
    }
  }
  return scalar_cache_.emplace(mask.bits(), std::move(result)).first->second;
}

Rational NisEngine::av1_edge(Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= root_.order() || e.v >= root_.order() ||
      !root_.adjacent(e.u, e.v)) {
    throw std::invalid_argument("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") is not an edge");
  }
  return Rational(2) + summarize(i0(edge_residual(root_.universe(), e.u, e.v))).average;
}

std::vector<EdgeTerm> NisEngine::edge_terms() {
  const auto all = root_.edges();
  if (all.empty()) throw std::domain_error("edge terms undefined for edgeless graph");
  const VertexMask everything = root_.universe();
  std::vector<EdgeTerm> terms;
  BigInt weight_sum = 0;
  for (const Edge& e : all) {
    EdgeTerm t;
    t.edge = e;
    t.residual = edge_residual(everything, e.u, e.v);
    const CountPolynomial& p = i0(t.residual);
    t.sigma0 = p.at_one();
    t.total0 = p.derivative_at_one();
    t.union_size = neighborhood_union(root_, e.u, e.v, Neighborhood::open).count();
    t.closed_u = root_.closed_neighbors(e.u).count();
    t.closed_v = root_.closed_neighbors(e.v).count();
    t.sigma0_without_u = i0(everything.without(e.u)).at_one();
    t.sigma0_without_v = i0(everything.without(e.v)).at_one();
    weight_sum += t.sigma0;
    terms.push_back(std::move(t));
  }
  for (auto& t : terms) t.weight = Rational(t.sigma0, weight_sum);
  return terms;
}

CountPolynomial i0_polynomial(const Graph& g) { return NisEngine(g).i0(); }
CountPolynomial i1_vertex_recursion(const Graph& g) { return NisEngine(g).i1_vertex_recursion(); }
CountPolynomial i1_edge_decomposition(const Graph& g) {
  return NisEngine(g).i1_edge_decomposition();
}
NisSummary s1_vertex_recursion(const Graph& g) { return NisEngine(g).s1_vertex_recursion(); }
Rational av1_edge(const Graph& g, Edge e) { return NisEngine(g).av1_edge(e); }
std::vector<EdgeTerm> edge_terms(const Graph& g) { return NisEngine(g).edge_terms(); }

Rational sigma_ratio(const Graph& g) {
  NisEngine engine(g);
  const ScalarCounts& c = engine.scalar_counts();
  return Rational(c.sigma1, c.sigma0);
}

}  // namespace nis
