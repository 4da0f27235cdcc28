#include "nis/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "nis/error.hpp"

namespace nis {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    rows[e.u] = rows[e.u].with(e.v);
    rows[e.v] = rows[e.v].with(e.u);
  }
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

Graph Graph::edgeless(int n) {
  check_order(n);
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), VertexMask());
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexMask> rows) {
  check_order(static_cast<int>(rows.size()));
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (VertexMask row : adj_) out.push_back(row.count());
  return out;
}

VertexMask neighborhood_union(const Graph& g, int u, int v, Neighborhood kind) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw std::out_of_range("vertex outside the graph");
  }
  if (u == v) throw std::invalid_argument("neighborhood union needs distinct vertices");
  if (kind == Neighborhood::closed) return g.closed_neighbors(u) | g.closed_neighbors(v);
  return g.neighbors(u) | g.neighbors(v);
}

InducedGraph induced(const Graph& g, VertexMask keep) {
  keep &= g.universe();
  InducedGraph out;
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (int v : keep) {
    position[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<VertexMask> rows(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (int w : g.neighbors(out.original[i]) & keep) rows[i] = rows[i].with(position[w]);
  }
  out.graph = Graph::from_adjacency(std::move(rows));
  return out;
}

std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask rest = within & g.universe();
  while (!rest.empty()) {
    VertexMask comp = VertexMask::single(rest.first());
    VertexMask frontier = comp;
    while (!frontier.empty()) {
      VertexMask next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & rest) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g, g.universe()).size() <= 1; }

bool is_good_graph(const Graph& g) {
  const auto all = g.edges();
  if (all.empty()) return false;
  return std::all_of(all.begin(), all.end(), [&](const Edge& e) {
    return neighborhood_union(g, e.u, e.v, Neighborhood::open) == g.universe();
  });
}

DeltaBounds delta_bounds(const Graph& g) {
  const auto all = g.edges();
  if (all.empty()) throw std::domain_error("delta bounds undefined for edgeless graph");
  DeltaBounds out{g.order() + 1, 0};
  for (const Edge& e : all) {
    const int size = neighborhood_union(g, e.u, e.v, Neighborhood::open).count();
    out.min_union = std::min(out.min_union, size);
    out.max_union = std::max(out.max_union, size);
  }
  return out;
}

StructuralProfile structural_predicates(const Graph& g) {
  StructuralProfile p;
  p.is_connected = is_connected(g);
  p.is_tree = g.order() >= 1 && p.is_connected && g.edge_count() == g.order() - 1;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    p.max_degree = std::max(p.max_degree, d);
    if (d == 0) p.has_isolated_vertex = true;
    if (d > 1 && (!p.min_internal_degree || d < *p.min_internal_degree)) {
      p.min_internal_degree = d;
    }
  }
  return p;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > kMaxOrder) {
    throw LimitError("disjoint union of order " + std::to_string(n) +
                     " exceeds the vertex universe cap " + std::to_string(kMaxOrder));
  }
  std::vector<VertexMask> rows(a.rows().begin(), a.rows().end());
  for (VertexMask row : b.rows()) rows.push_back(VertexMask(row.bits() << a.order()));
  return Graph::from_adjacency(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation size differs from graph order");
  }
  std::vector<VertexMask> rows(perm.size());
  for (int v = 0; v < g.order(); ++v) {
    VertexMask row;
    for (int w : g.neighbors(v)) row = row.with(perm[w]);
    rows[perm[v]] = row;
  }
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace nis
