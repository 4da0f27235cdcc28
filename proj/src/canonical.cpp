#include <algorithm>
#include <map>
#include <stdexcept>

#include "nis/error.hpp"
#include "nis/graph.hpp"

namespace nis {

namespace {

// Stable ordered partition by iterated neighbor-color refinement. Color ids
// are assigned by sorted signature, so the result is isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.push_back(color[v]);
      for (int w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& sig : signature) ids.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[v] = ids[signature[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class PermutationSearch {
 public:
  explicit PermutationSearch(const Graph& g) : g_(g), n_(g.order()) {
    color_ = refine_colors(g);
    cell_of_position_ = color_;
    std::sort(cell_of_position_.begin(), cell_of_position_.end());
    order_.assign(static_cast<std::size_t>(n_), -1);
    current_.assign(static_cast<std::size_t>(n_), 0);
    best_.assign(static_cast<std::size_t>(n_), 0);
    best_order_.assign(static_cast<std::size_t>(n_), 0);
  }

  // best_order_[position] = original vertex
  std::vector<int> run() {
    if (n_ > 0) search(0, Cmp::less, VertexMask());
    return best_order_;
  }

 private:
  enum class Cmp { less, equal };

  bool twins(int a, int b) const {
    return g_.neighbors(a).without(b) == g_.neighbors(b).without(a);
  }

  void search(int position, Cmp cmp, VertexMask used) {
    if (position == n_) {
      if (!have_best_ || cmp == Cmp::less) {
        best_ = current_;
        best_order_ = order_;
        have_best_ = true;
        ++improvements_;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (used.contains(v) || color_[v] != cell_of_position_[position]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::uint64_t column = 0;
      for (int i = 0; i < position; ++i) {
        column = (column << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
      }
      Cmp next = Cmp::less;
      if (have_best_ && cmp == Cmp::equal) {
        if (column > best_[position]) continue;
        next = column < best_[position] ? Cmp::less : Cmp::equal;
      }
      current_[position] = column;
      order_[position] = v;
      const auto before = improvements_;
      search(position + 1, next, used.with(v));
      // a new best found below shares this prefix
      if (improvements_ != before) cmp = Cmp::equal;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::vector<int> order_;
  std::vector<std::uint64_t> current_;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_order_;
  bool have_best_ = false;
  std::uint64_t improvements_ = 0;
};

CanonicalCode code_from_order(const Graph& g, const std::vector<int>& order) {
  std::vector<int> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = static_cast<int>(pos);
  return CanonicalCode(to_graph6(relabel(g, perm)));
}

struct RootedEncoder {
  const Graph& g;
  std::vector<std::string> code;
  std::vector<std::vector<int>> children;

  explicit RootedEncoder(const Graph& graph)
      : g(graph),
        code(static_cast<std::size_t>(graph.order())),
        children(static_cast<std::size_t>(graph.order())) {}

  const std::string& encode(int v, int parent) {
    auto& kids = children[v];
    kids.clear();
    for (int w : g.neighbors(v)) {
      if (w != parent) {
        encode(w, v);
        kids.push_back(w);
      }
    }
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return code[a] < code[b]; });
    std::string& out = code[v];
    out = "(";
    for (int w : kids) out += code[w];
    out += ")";
    return out;
  }

  void preorder(int v, std::vector<int>& out) const {
    out.push_back(v);
    for (int w : children[v]) preorder(w, out);
  }
};

std::vector<int> tree_centers(const Graph& g) {
  const int n = g.order();
  std::vector<int> degree = g.degree_sequence();
  std::vector<int> layer;
  VertexMask alive = g.universe();
  for (int v = 0; v < n; ++v) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int leaf : layer) {
      alive = alive.without(leaf);
      --remaining;
      for (int w : g.neighbors(leaf) & alive) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers(alive.begin(), alive.end());
  return centers;
}

}  // namespace

CanonicalCode canonical_code_by_permutation(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw LimitError("order " + std::to_string(g.order()) +
                     " too large for canonicalization (graph-core cap " +
                     std::to_string(kMaxCanonicalOrder) + ")");
  }
  return code_from_order(g, PermutationSearch(g).run());
}

CanonicalCode canonical_tree_code(const Graph& g) {
  if (!structural_predicates(g).is_tree) {
    throw std::invalid_argument("canonical_tree_code needs a tree");
  }
  RootedEncoder enc(g);
  const auto centers = tree_centers(g);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.order()));
  if (centers.size() == 1) {
    enc.encode(centers[0], -1);
    enc.preorder(centers[0], order);
  } else {
    int a = centers[0];
    int b = centers[1];
    enc.encode(a, b);
    enc.encode(b, a);
    if (enc.code[b] < enc.code[a]) std::swap(a, b);
    enc.preorder(a, order);
    enc.preorder(b, order);
  }
  return code_from_order(g, order);
}

CanonicalCode canonical_code(const Graph& g) {
  if (g.order() >= 1 && structural_predicates(g).is_tree) return canonical_tree_code(g);
  return canonical_code_by_permutation(g);
}

}  // namespace nis
