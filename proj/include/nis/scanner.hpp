#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nis/engine.hpp"
#include "nis/graph.hpp"

namespace nis {

inline constexpr int kMaxGraphScanOrder = 7;
inline constexpr std::size_t kDefaultWitnessCap = 100;

enum class Objective { av1, av0, sigma1, sigma_ratio };
enum class GraphFilter { all, connected, no_isolated_max_degree2, non_edgeless };

std::string_view objective_name(Objective o);
Objective parse_objective(std::string_view name);
std::string_view filter_name(GraphFilter f);
GraphFilter parse_filter(std::string_view name);

bool passes_filter(const Graph& g, GraphFilter f);

/// Objective value from precomputed counts.
Rational objective_value(const ScalarCounts& counts, Objective o);

/// The smallest `cap` canonical codes of a witness population plus its size.
class WitnessList {
 public:
  explicit WitnessList(std::size_t cap = kDefaultWitnessCap) : cap_(cap) {}

  void add(const CanonicalCode& code);
  void merge(const WitnessList& other);
  void clear() { codes_.clear(); total_ = 0; }

  const std::set<CanonicalCode>& codes() const { return codes_; }
  std::size_t total() const { return total_; }
  bool truncated() const { return total_ > codes_.size(); }

 private:
  std::size_t cap_;
  std::set<CanonicalCode> codes_;
  std::size_t total_ = 0;
};

/// Running min and max of an exact statistic with witness lists. The code
/// callback runs only when a value ties or beats a current extreme.
class Extremes {
 public:
  explicit Extremes(std::size_t cap = kDefaultWitnessCap) : min_witnesses_(cap), max_witnesses_(cap) {}

  void offer(const Rational& value, const std::function<CanonicalCode()>& code);
  void merge(const Extremes& other);

  const std::optional<Rational>& min() const { return min_; }
  const std::optional<Rational>& max() const { return max_; }
  const WitnessList& min_witnesses() const { return min_witnesses_; }
  const WitnessList& max_witnesses() const { return max_witnesses_; }

 private:
  std::optional<Rational> min_;
  std::optional<Rational> max_;
  WitnessList min_witnesses_;
  WitnessList max_witnesses_;
};

enum class ViolationKind {
  inequality,  // a claimed inequality failed
  equality,    // a claimed equality or equality case failed; recorded only
  route,       // two computation routes disagreed
};

std::string_view violation_kind_name(ViolationKind k);

struct Violation {
  std::string graph6;
  std::string claim;
  std::string observed;
  ViolationKind kind = ViolationKind::inequality;

  auto operator<=>(const Violation&) const = default;
};

struct ScanReport {
  std::string claim_id;  // empty for plain scans
  std::string population;
  int order = 0;
  Objective objective = Objective::av1;
  std::uint64_t population_size = 0;
  Extremes extremes;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  /// Violations that make a run fail: inequality or route.
  bool has_blocking_violation() const;
};

struct ScanOptions {
  int workers = 1;
  double spot_check_rate = 0.01;
  std::uint64_t seed = 0x6e6973ULL;
  std::size_t witness_cap = kDefaultWitnessCap;
};

/// Deterministic per-item sampling decision, independent of scheduling.
bool spot_check_selected(std::uint64_t seed, int order, std::uint64_t index, double rate);

/// Cross-checks the scalar counts of g against the subset oracle. Returns
/// the route violations found (empty on agreement).
std::vector<Violation> oracle_spot_check(const Graph& g, const ScalarCounts& counts);

/// Calls body(worker) on `workers` threads; inline when workers ≤ 1.
void run_workers(int workers, const std::function<void(int)>& body);

/// Representatives (canonical form) of every isomorphism class of graphs of
/// order n, from the 2^C(n,2) labeled graphs. Sorted by canonical code and
/// cached per process. Throws LimitError above order 7.
const std::vector<Graph>& graph_classes(int n);

/// Exact extremes of the objective over all free trees of order 2..24.
ScanReport scan_trees(int n, Objective objective, const ScanOptions& options = {});

/// Exact extremes over isomorphism classes of graphs of order 2..7 passing
/// the filter. The edgeless graph is excluded when the objective is av₁.
ScanReport scan_graphs(int n, GraphFilter filter, Objective objective,
                       const ScanOptions& options = {});

struct RankedTree {
  Rational value;
  CanonicalCode code;
};

struct ConjectureRow {
  int order = 0;
  bool r_is_unique_max = false;
  Rational max_value;
  Rational r_value;
  WitnessList max_witnesses;
  std::vector<RankedTree> top;  // best five trees by av₁
  std::vector<Violation> violations;  // oracle spot-check findings
};

/// Whether R_n is the unique av₁ maximizer among trees, for each order in
/// [from, to] (orders ≥ 4).
std::vector<ConjectureRow> conjecture_scan(int from, int to, const ScanOptions& options = {});

}  // namespace nis
