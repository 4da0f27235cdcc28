#include "nis/scanner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nis/error.hpp"
#include "nis/families.hpp"
#include "nis/oracle.hpp"
#include "nis/tree_forge.hpp"

namespace nis {

std::string_view objective_name(Objective o) {
  switch (o) {
    case Objective::av1: return "av1";
    case Objective::av0: return "av0";
    case Objective::sigma1: return "sigma1";
    case Objective::sigma_ratio: return "sigma1/sigma0";
  }
  return "?";
}

Objective parse_objective(std::string_view name) {
  for (Objective o : {Objective::av1, Objective::av0, Objective::sigma1, Objective::sigma_ratio}) {
    if (objective_name(o) == name) return o;
  }
  if (name == "ratio") return Objective::sigma_ratio;
  throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
}

std::string_view filter_name(GraphFilter f) {
  switch (f) {
    case GraphFilter::all: return "all";
    case GraphFilter::connected: return "connected";
    case GraphFilter::no_isolated_max_degree2: return "no-isolated-max-deg-2";
    case GraphFilter::non_edgeless: return "non-edgeless";
  }
  return "?";
}

GraphFilter parse_filter(std::string_view name) {
  for (GraphFilter f : {GraphFilter::all, GraphFilter::connected,
                        GraphFilter::no_isolated_max_degree2, GraphFilter::non_edgeless}) {
    if (filter_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
}

bool passes_filter(const Graph& g, GraphFilter f) {
  switch (f) {
    case GraphFilter::all: return true;
    case GraphFilter::connected: return is_connected(g);
    case GraphFilter::no_isolated_max_degree2: {
      const auto p = structural_predicates(g);
      return !p.has_isolated_vertex && p.max_degree <= 2;
    }
    case GraphFilter::non_edgeless: return g.edge_count() > 0;
  }
  return false;
}

Rational objective_value(const ScalarCounts& c, Objective o) {
  switch (o) {
    case Objective::av1: return c.summary1().average;
    case Objective::av0: return c.summary0().average;
    case Objective::sigma1: return Rational(c.sigma1);
    case Objective::sigma_ratio: return Rational(c.sigma1, c.sigma0);
  }
  return Rational(0);
}

void WitnessList::add(const CanonicalCode& code) {
  ++total_;
  codes_.insert(code);
  if (codes_.size() > cap_) codes_.erase(std::prev(codes_.end()));
}

void WitnessList::merge(const WitnessList& other) {
  total_ += other.total_;
  for (const auto& c : other.codes_) {
    codes_.insert(c);
    if (codes_.size() > cap_) codes_.erase(std::prev(codes_.end()));
  }
}

void Extremes::offer(const Rational& value, const std::function<CanonicalCode()>& code) {
  const bool new_min = !min_ || value < *min_;
  const bool tie_min = min_ && value == *min_;
  const bool new_max = !max_ || value > *max_;
  const bool tie_max = max_ && value == *max_;
  if (!(new_min || tie_min || new_max || tie_max)) return;
  const CanonicalCode c = code();
  if (new_min) {
    min_ = value;
    min_witnesses_.clear();
  }
  if (new_min || tie_min) min_witnesses_.add(c);
  if (new_max) {
    max_ = value;
    max_witnesses_.clear();
  }
  if (new_max || tie_max) max_witnesses_.add(c);
}

void Extremes::merge(const Extremes& other) {
  if (other.min_) {
    if (!min_ || *other.min_ < *min_) {
      min_ = other.min_;
      min_witnesses_ = other.min_witnesses_;
    } else if (*other.min_ == *min_) {
      min_witnesses_.merge(other.min_witnesses_);
    }
  }
  if (other.max_) {
    if (!max_ || *other.max_ > *max_) {
      max_ = other.max_;
      max_witnesses_ = other.max_witnesses_;
    } else if (*other.max_ == *max_) {
      max_witnesses_.merge(other.max_witnesses_);
    }
  }
}

std::string_view violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::inequality: return "inequality";
    case ViolationKind::equality: return "equality";
    case ViolationKind::route: return "route";
  }
  return "?";
}

bool ScanReport::has_blocking_violation() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.kind != ViolationKind::equality; });
}

bool spot_check_selected(std::uint64_t seed, int order, std::uint64_t index, double rate) {
  if (rate <= 0.0) return false;
  if (rate >= 1.0) return true;
  // splitmix64 finalizer
  std::uint64_t z = seed ^ (static_cast<std::uint64_t>(order) << 40) ^ index;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53 < rate;
}

std::vector<Violation> oracle_spot_check(const Graph& g, const ScalarCounts& counts) {
  std::vector<Violation> out;
  const NisSummary o0 = oracle_summary(g, 0);
  const NisSummary o1 = oracle_summary(g, 1);
  if (o0.sigma != counts.sigma0 || o0.total != counts.total0 || o1.sigma != counts.sigma1 ||
      o1.total != counts.total1) {
    out.push_back({to_graph6(g), "engine scalar counts equal subset-oracle counts",
                   "engine (" + counts.sigma0.str() + "," + counts.total0.str() + "," +
                       counts.sigma1.str() + "," + counts.total1.str() + ") vs oracle (" +
                       o0.sigma.str() + "," + o0.total.str() + "," + o1.sigma.str() + "," +
                       o1.total.str() + ")",
                   ViolationKind::route});
  }
  return out;
}

void run_workers(int workers, const std::function<void(int)>& body) {
  if (workers <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
}

const std::vector<Graph>& graph_classes(int n) {
  if (n < 0 || n > kMaxGraphScanOrder) {
    throw LimitError("graph enumeration order " + std::to_string(n) +
                     " above exhaustive limit " + std::to_string(kMaxGraphScanOrder));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) slots.push_back({u, v});
  }
  std::set<CanonicalCode> codes;
  const std::uint64_t labeled = std::uint64_t{1} << slots.size();
  for (std::uint64_t bits = 0; bits < labeled; ++bits) {
    std::vector<VertexMask> rows(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((bits >> k) & 1U) {
        rows[slots[k].u] = rows[slots[k].u].with(slots[k].v);
        rows[slots[k].v] = rows[slots[k].v].with(slots[k].u);
      }
    }
    codes.insert(canonical_code(Graph::from_adjacency(std::move(rows))));
  }
  std::vector<Graph> reps;
  reps.reserve(codes.size());
  for (const auto& c : codes) reps.push_back(c.representative());
  return cache.emplace(n, std::move(reps)).first->second;
}

namespace {

struct Partial {
  explicit Partial(std::size_t cap) : extremes(cap) {}
  Extremes extremes;
  std::uint64_t count = 0;
  std::vector<Violation> violations;
};

void finish(ScanReport& report, std::vector<Partial>& parts) {
  for (auto& p : parts) {
    report.extremes.merge(p.extremes);
    report.population_size += p.count;
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end());
}

int worker_count(const ScanOptions& options) { return std::max(1, options.workers); }

}  // namespace

ScanReport scan_trees(int n, Objective objective, const ScanOptions& options) {
  if (n < 2 || n > kMaxTreeOrder) {
    throw LimitError("tree scan order " + std::to_string(n) + " outside 2.." +
                     std::to_string(kMaxTreeOrder));
  }
  const int workers = worker_count(options);
  std::vector<Partial> parts(static_cast<std::size_t>(workers), Partial(options.witness_cap));
  run_workers(workers, [&](int w) {
    Partial& part = parts[w];
    FreeTreeGenerator gen(n);
    std::uint64_t index = 0;
    do {
      if (index % workers == static_cast<std::uint64_t>(w)) {
        const Graph g = gen.graph();
        NisEngine engine(g);
        const ScalarCounts& counts = engine.scalar_counts();
        part.extremes.offer(objective_value(counts, objective),
                            [&] { return canonical_tree_code(g); });
        if (spot_check_selected(options.seed, n, index, options.spot_check_rate)) {
          auto found = oracle_spot_check(g, counts);
          part.violations.insert(part.violations.end(), found.begin(), found.end());
        }
        ++part.count;
      }
      ++index;
    } while (gen.next());
  });
  ScanReport report;
  report.population = "trees";
  report.order = n;
  report.objective = objective;
  report.extremes = Extremes(options.witness_cap);
  finish(report, parts);
  return report;
}

ScanReport scan_graphs(int n, GraphFilter filter, Objective objective, const ScanOptions& options) {
  if (n < 2 || n > kMaxGraphScanOrder) {
    throw LimitError("graph scan order " + std::to_string(n) + " outside 2.." +
                     std::to_string(kMaxGraphScanOrder) + " (exhaustive limit)");
  }
  const auto& classes = graph_classes(n);
  const bool drop_edgeless = objective == Objective::av1;
  const int workers = worker_count(options);
  std::vector<Partial> parts(static_cast<std::size_t>(workers), Partial(options.witness_cap));
  run_workers(workers, [&](int w) {
    Partial& part = parts[w];
    for (std::size_t i = static_cast<std::size_t>(w); i < classes.size(); i += workers) {
      const Graph& g = classes[i];
      if (!passes_filter(g, filter)) continue;
      if (drop_edgeless && g.edge_count() == 0) continue;
      NisEngine engine(g);
      const ScalarCounts& counts = engine.scalar_counts();
      part.extremes.offer(objective_value(counts, objective), [&] { return canonical_code(g); });
      if (spot_check_selected(options.seed, n, i, options.spot_check_rate)) {
        auto found = oracle_spot_check(g, counts);
        part.violations.insert(part.violations.end(), found.begin(), found.end());
      }
      ++part.count;
    }
  });
  ScanReport report;
  report.population = "graphs:" + std::string(filter_name(filter));
  report.order = n;
  report.objective = objective;
  report.extremes = Extremes(options.witness_cap);
  finish(report, parts);
  return report;
}

namespace {

constexpr std::size_t kTopTrees = 5;

bool ranks_before(const RankedTree& a, const RankedTree& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.code < b.code;
}

void keep_top(std::vector<RankedTree>& top, RankedTree candidate) {
  top.insert(std::upper_bound(top.begin(), top.end(), candidate, ranks_before), std::move(candidate));
  if (top.size() > kTopTrees) top.pop_back();
}

}  // namespace

std::vector<ConjectureRow> conjecture_scan(int from, int to, const ScanOptions& options) {
  if (from < 4 || to > kMaxTreeOrder || from > to) {
    throw LimitError("conjecture scan needs 4 <= from <= to <= " + std::to_string(kMaxTreeOrder));
  }
  std::vector<ConjectureRow> rows;
  for (int n = from; n <= to; ++n) {
    const int workers = worker_count(options);
    struct Part {
      Extremes extremes;
      std::vector<RankedTree> top;
      std::vector<Violation> violations;
    };
    std::vector<Part> parts(static_cast<std::size_t>(workers),
                            Part{Extremes(options.witness_cap), {}, {}});
    run_workers(workers, [&](int w) {
      Part& part = parts[w];
      FreeTreeGenerator gen(n);
      std::uint64_t index = 0;
      do {
        if (index % workers == static_cast<std::uint64_t>(w)) {
          const Graph g = gen.graph();
          NisEngine engine(g);
          const ScalarCounts& counts = engine.scalar_counts();
          const Rational value = counts.summary1().average;
          std::optional<CanonicalCode> code;
          auto get_code = [&] {
            if (!code) code = canonical_tree_code(g);
            return *code;
          };
          part.extremes.offer(value, get_code);
          if (part.top.size() < kTopTrees || value >= part.top.back().value) {
            keep_top(part.top, {value, get_code()});
          }
          if (spot_check_selected(options.seed, n, index, options.spot_check_rate)) {
            auto found = oracle_spot_check(g, counts);
            part.violations.insert(part.violations.end(), found.begin(), found.end());
          }
        }
        ++index;
      } while (gen.next());
    });
    ConjectureRow row;
    row.order = n;
    Extremes all(options.witness_cap);
    for (auto& p : parts) {
      all.merge(p.extremes);
      for (auto& t : p.top) keep_top(row.top, t);
      row.violations.insert(row.violations.end(), p.violations.begin(), p.violations.end());
    }
    std::sort(row.violations.begin(), row.violations.end());
    row.max_value = *all.max();
    row.max_witnesses = all.max_witnesses();
    const Graph r = build({Family::R, n});
    row.r_value = NisEngine(r).s1_vertex_recursion().average;
    const CanonicalCode r_code = canonical_tree_code(r);
    row.r_is_unique_max = row.max_witnesses.total() == 1 && row.max_witnesses.codes().count(r_code) == 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nis
