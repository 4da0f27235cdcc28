#include "nis/tree_forge.hpp"

#include "nis/error.hpp"

namespace nis {

Graph LevelSequence::to_graph() const {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<int> last_at_level(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int depth = levels[i];
    if (depth > 0) edges.push_back({last_at_level[depth - 1], i});
    last_at_level[depth] = i;
  }
  return Graph::from_edges(n, edges);
}

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw LimitError("tree order " + std::to_string(n) + " outside tree-forge range 1.." +
                     std::to_string(kMaxTreeOrder));
  }
  const int infinity = 2 * n + 2;
  L_.assign(static_cast<std::size_t>(2 * n + 2), 0);
  W_.assign(static_cast<std::size_t>(2 * n + 2), 0);
  const int k = n / 2 + 1;
  p_ = n == 4 ? 3 : n;
  q_ = n - 1;
  h1_ = k;
  h2_ = n;
  c_ = n % 2 == 1 ? infinity : n + 1;
  r_ = k;
  for (int i = 1; i <= k; ++i) L_[i] = i;
  for (int i = k + 1; i <= n; ++i) L_[i] = i - k + 1;
  for (int i = 1; i <= n; ++i) W_[i] = i - 1;
  if (n > 1) W_[k + 1] = 1;
  if (n <= 3) q_ = 0;
}

LevelSequence FreeTreeGenerator::levels() const {
  LevelSequence out;
  out.levels.reserve(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) out.levels.push_back(L_[i] - 1);
  return out;
}

bool FreeTreeGenerator::next() {
  if (q_ == 0) return false;
  const int n = n_;
  const int infinity = 2 * n + 2;
  auto& L = L_;
  auto& W = W_;
  int p = p_, q = q_, h1 = h1_, h2 = h2_, c = c_, r = r_;

  bool fixit = false;
  if (c == n + 1 ||
      (p == h2 && ((L[h1] == L[h2] + 1 && n - h2 > r - h1) ||
                   (L[h1] == L[h2] && n - h2 + 1 < r - h1)))) {
    if (L[r] > 3) {
      p = r;
      q = W[r];
      if (h1 == r) h1 = h1 - 1;
      fixit = true;
    } else {
      p = r;
      r = r - 1;
      q = 2;
    }
  }

  bool needr = false;
  bool needc = false;
  bool needh2 = false;
  if (p <= h1) h1 = p - 1;
  if (p <= r) {
    needr = true;
  } else if (p <= h2) {
    needh2 = true;
  } else if (L[h2] == L[h1] - 1 && n - h2 == r - h1) {
    if (p <= c) needc = true;
  } else {
    c = infinity;
  }

  const int oldp = p;
  const int delta = q - p;
  const int oldLq = L[q];
  const int oldWq = W[q];
  p = infinity;

  for (int i = oldp; i <= n; ++i) {
    L[i] = L[i + delta];
    if (L[i] == 2) {
      W[i] = 1;
    } else {
      p = i;
      q = L[i] == oldLq ? oldWq : W[i + delta] - delta;
      W[i] = q;
    }
    if (needr && L[i] == 2) {
      needr = false;
      needh2 = true;
      r = i - 1;
    }
    if (needh2 && L[i] <= L[i - 1] && i > r + 1) {
      needh2 = false;
      h2 = i - 1;
      if (L[h2] == L[h1] - 1 && n - h2 == r - h1) {
        needc = true;
      } else {
        c = infinity;
      }
    }
    if (needc) {
      if (L[i] != L[h1 - h2 + i] - 1) {
        needc = false;
        c = i;
      } else {
        c = i + 1;
      }
    }
  }

  if (fixit) {
    r = n - h1 + 1;
    for (int i = r + 1; i <= n; ++i) {
      L[i] = i - r + 1;
      W[i] = i - 1;
    }
    W[r + 1] = 1;
    h2 = n;
    p = n;
    q = p - 1;
    c = infinity;
  } else {
    if (p == infinity) {
      p = L[oldp - 1] != 2 ? oldp - 1 : oldp - 2;
      q = W[p];
    }
    if (needh2) {
      h2 = n;
      c = (L[h2] == L[h1] - 1 && h1 == r) ? n + 1 : infinity;
    }
  }

  p_ = p;
  q_ = q;
  h1_ = h1;
  h2_ = h2;
  c_ = c;
  r_ = r;
  return true;
}

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
  FreeTreeGenerator gen(n);
  do {
    visit(gen.graph());
  } while (gen.next());
}

std::vector<Graph> free_trees(int n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_free_trees(int n) {
  FreeTreeGenerator gen(n);
  std::uint64_t count = 1;
  while (gen.next()) ++count;
  return count;
}

}  // namespace nis
