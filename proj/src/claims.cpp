#include "nis/claims.hpp"

#include <algorithm>

#include "nis/engine.hpp"
#include "nis/families.hpp"
#include "nis/tree_forge.hpp"

namespace nis {

std::vector<std::string> claim_ids() {
  return {kClaimGraphMin,   kClaimGraphMax,     kClaimDeltaSandwich, kClaimEdgeBracket,
          kClaimHelpSandwich, kClaimRatioThird, kClaimTreeMin,       kClaimTreeInternal,
          kClaimTreeUpper,  kClaimTreeBand,     kClaimRClosedForm,   kClaimRAboveHalf,
          kClaimConjecture};
}

namespace {

ScanReport make_report(const char* claim, std::string population, int order,
                       const ScanOptions& scan) {
  ScanReport r;
  r.claim_id = claim;
  r.population = std::move(population);
  r.order = order;
  r.objective = Objective::av1;
  r.extremes = Extremes(scan.witness_cap);
  return r;
}

std::string frac(const Rational& r) { return to_fraction_string(r); }

Violation violation(const Graph& g, std::string claim, std::string observed, ViolationKind kind) {
  return {to_graph6(g), std::move(claim), std::move(observed), kind};
}

void expect_le(ScanReport& report, const Graph& g, const Rational& lhs, const Rational& rhs,
               const std::string& claim, ViolationKind kind = ViolationKind::inequality) {
  if (lhs > rhs) report.violations.push_back(violation(g, claim, frac(lhs) + " > " + frac(rhs), kind));
}

void expect_lt(ScanReport& report, const Graph& g, const Rational& lhs, const Rational& rhs,
               const std::string& claim) {
  if (lhs >= rhs) {
    report.violations.push_back(
        violation(g, claim, frac(lhs) + " >= " + frac(rhs), ViolationKind::inequality));
  }
}

class Selection {
 public:
  explicit Selection(const std::set<std::string>& chosen) : chosen_(chosen) {}
  bool operator()(const char* id) const { return chosen_.empty() || chosen_.count(id) > 0; }

 private:
  const std::set<std::string>& chosen_;
};

void sort_violations(std::vector<ScanReport>& reports) {
  for (auto& r : reports) std::sort(r.violations.begin(), r.violations.end());
}

// All claims quantified over graphs of one order, in one pass over the
// isomorphism classes.
std::vector<ScanReport> graph_claims(int n, const VerifyOptions& opt, const Selection& want) {
  const ScanOptions& scan = opt.scan;
  const std::string population = "graphs:non-edgeless";
  ScanReport min_r = make_report(kClaimGraphMin, population, n, scan);
  ScanReport max_r = make_report(kClaimGraphMax, population, n, scan);
  ScanReport delta_r = make_report(kClaimDeltaSandwich, population, n, scan);
  ScanReport bracket_r = make_report(kClaimEdgeBracket, population, n, scan);
  ScanReport help_r = make_report(kClaimHelpSandwich, population, n, scan);
  const Rational two(2);
  const Rational max_bound = Rational(n, 2) + 1;

  const auto& classes = graph_classes(n);
  for (std::size_t index = 0; index < classes.size(); ++index) {
    const Graph& g = classes[index];
    if (g.edge_count() == 0) continue;
    NisEngine engine(g);
    const ScalarCounts counts = engine.scalar_counts();
    const Rational av1 = counts.summary1().average;
    const auto code = [&] { return canonical_code(g); };
    for (ScanReport* r : {&min_r, &max_r, &delta_r, &bracket_r, &help_r}) {
      r->extremes.offer(av1, code);
      ++r->population_size;
    }
    if (summarize(engine.i1_vertex_recursion()) != counts.summary1() ||
        summarize(engine.i0()) != counts.summary0()) {
      bracket_r.violations.push_back(violation(g, "polynomial and scalar routes agree",
                                               "summaries differ", ViolationKind::route));
    }
    if (spot_check_selected(scan.seed, n, index, scan.spot_check_rate)) {
      for (auto& v : oracle_spot_check(g, counts)) bracket_r.violations.push_back(v);
    }

    // av₁ ≥ 2 with equality exactly on good graphs
    expect_le(min_r, g, two, av1, "av1(G) >= 2");
    if ((av1 == two) != is_good_graph(g)) {
      min_r.violations.push_back(violation(
          g, "av1(G) = 2 iff G is good",
          "av1 = " + frac(av1) + ", good = " + (is_good_graph(g) ? "true" : "false"),
          ViolationKind::equality));
    }

    if (n >= 6) expect_le(max_r, g, av1, max_bound, "av1(G) <= n/2 + 1");

    const DeltaBounds d = delta_bounds(g);
    const Rational lower(3 * n + 2 - 3 * d.max_union, n + 1 - d.max_union);
    const Rational upper(n + 4 - d.min_union, 2);
    expect_le(delta_r, g, two, lower, "2 <= (3n+2-3*delta2)/(n+1-delta2)");
    expect_le(delta_r, g, lower, av1, "(3n+2-3*delta2)/(n+1-delta2) <= av1(G)");
    expect_le(delta_r, g, av1, upper, "av1(G) <= (n+4-delta1)/2");
    expect_le(delta_r, g, upper, Rational(n + 2, 2), "(n+4-delta1)/2 <= (n+2)/2");

    const auto terms = engine.edge_terms();
    Rational lo = two + terms.front().residual_average();
    Rational hi = lo;
    Rational weighted = two;
    Rational weight_sum = 0;
    for (const auto& t : terms) {
      const Rational edge_av = two + t.residual_average();
      lo = std::min(lo, edge_av);
      hi = std::max(hi, edge_av);
      weighted += t.weight * t.residual_average();
      weight_sum += t.weight;
    }
    expect_le(bracket_r, g, lo, av1, "min_e av1(G,e) <= av1(G)");
    expect_le(bracket_r, g, av1, hi, "av1(G) <= max_e av1(G,e)");
    if (weighted != av1 || weight_sum != 1) {
      bracket_r.violations.push_back(violation(g, "av1(G) = 2 + sum_e alpha_e av0(H_e)",
                                               frac(weighted) + " vs " + frac(av1),
                                               ViolationKind::route));
    }

    for (const auto& t : terms) {
      const Rational ratio(t.sigma0, counts.sigma0);
      const unsigned l = static_cast<unsigned>(t.union_size);
      const Rational lower_help(1, pow2(l - 2) + pow2(l - t.closed_u) + pow2(l - t.closed_v) + 1);
      const Rational weak(1, 3 * pow2(l - 2) + 1);
      const std::string at = " at edge " + std::to_string(t.edge.u) + "-" + std::to_string(t.edge.v);
      expect_le(help_r, g, lower_help, ratio, "lower sandwich" + at);
      expect_le(help_r, g, weak, ratio, "1/(3*2^(l-2)+1) bound" + at);
      expect_le(help_r, g, ratio, 1 - Rational(t.sigma0_without_v, counts.sigma0),
                "upper sandwich (remove v)" + at);
      expect_le(help_r, g, ratio, 1 - Rational(t.sigma0_without_u, counts.sigma0),
                "upper sandwich (remove u)" + at);
    }
  }

  if (n >= 6) {
    const CanonicalCode expected = canonical_code(build({Family::G_special, n}));
    const auto& w = max_r.extremes.max_witnesses();
    if (max_r.extremes.max() != max_bound || w.total() != 1 || w.codes().count(expected) == 0) {
      max_r.violations.push_back({expected.graph6(), "G_n is the unique maximizer with av1 = n/2 + 1",
                                  "max " + frac(*max_r.extremes.max()) + " with " +
                                      std::to_string(w.total()) + " witnesses",
                                  ViolationKind::equality});
    }
  }

  std::vector<ScanReport> out;
  if (want(kClaimGraphMin)) out.push_back(std::move(min_r));
  if (want(kClaimGraphMax) && n >= 6) out.push_back(std::move(max_r));
  if (want(kClaimDeltaSandwich)) out.push_back(std::move(delta_r));
  if (want(kClaimEdgeBracket)) out.push_back(std::move(bracket_r));
  if (want(kClaimHelpSandwich)) out.push_back(std::move(help_r));
  return out;
}

std::vector<ScanReport> tree_claims(int n, const VerifyOptions& opt, const Selection& want) {
  const ScanOptions& scan = opt.scan;
  const int workers = std::max(1, scan.workers);
  struct Part {
    Extremes extremes;
    std::uint64_t count = 0;
    std::vector<Violation> internal;
    std::vector<Violation> upper;
    std::vector<Violation> route;
  };
  std::vector<Part> parts(static_cast<std::size_t>(workers), Part{Extremes(scan.witness_cap), 0, {}, {}, {}});
  const Rational upper_bound = 2 + Rational(std::max(n - 3, 0), 2);
  run_workers(workers, [&](int w) {
    Part& part = parts[w];
    FreeTreeGenerator gen(n);
    std::uint64_t index = 0;
    do {
      if (index % workers == static_cast<std::uint64_t>(w)) {
        const Graph g = gen.graph();
        NisEngine engine(g);
        const ScalarCounts& counts = engine.scalar_counts();
        const Rational av1 = counts.summary1().average;
        part.extremes.offer(av1, [&] { return canonical_tree_code(g); });
        ++part.count;
        if (const auto internal = structural_predicates(g).min_internal_degree) {
          const Rational bound = 2 + Rational(n - *internal - 1, 2);
          if (av1 > bound) {
            part.internal.push_back(violation(g, "av1(T) <= 2 + (n - delta' - 1)/2",
                                              frac(av1) + " > " + frac(bound),
                                              ViolationKind::inequality));
          }
        }
        if (av1 > upper_bound) {
          part.upper.push_back(violation(g, "av1(T) <= 2 + max(n-3,0)/2",
                                         frac(av1) + " > " + frac(upper_bound),
                                         ViolationKind::inequality));
        }
        if (spot_check_selected(scan.seed, n, index, scan.spot_check_rate)) {
          for (auto& v : oracle_spot_check(g, counts)) part.route.push_back(v);
        }
      }
      ++index;
    } while (gen.next());
  });

  Extremes extremes(scan.witness_cap);
  std::uint64_t count = 0;
  std::vector<Violation> internal, upper, route;
  for (auto& p : parts) {
    extremes.merge(p.extremes);
    count += p.count;
    internal.insert(internal.end(), p.internal.begin(), p.internal.end());
    upper.insert(upper.end(), p.upper.begin(), p.upper.end());
    route.insert(route.end(), p.route.begin(), p.route.end());
  }
  auto report = [&](const char* claim) {
    ScanReport r = make_report(claim, "trees", n, scan);
    r.extremes = extremes;
    r.population_size = count;
    r.violations = route;
    return r;
  };

  std::vector<ScanReport> out;
  if (want(kClaimTreeMin) && n >= 3) {
    ScanReport r = report(kClaimTreeMin);
    const CanonicalCode star = canonical_tree_code(build({Family::star, n}));
    if (*extremes.min() < 2) {
      r.violations.push_back({extremes.min_witnesses().codes().begin()->graph6(), "av1(T) >= 2",
                              frac(*extremes.min()), ViolationKind::inequality});
    }
    if (*extremes.min() != 2 || extremes.min_witnesses().total() != 1 ||
        extremes.min_witnesses().codes().count(star) == 0) {
      r.violations.push_back({star.graph6(), "S_n is the unique minimizer with av1 = 2",
                              "min " + frac(*extremes.min()) + " with " +
                                  std::to_string(extremes.min_witnesses().total()) + " witnesses",
                              ViolationKind::equality});
    }
    out.push_back(std::move(r));
  }
  if (want(kClaimTreeInternal)) {
    ScanReport r = report(kClaimTreeInternal);
    r.violations.insert(r.violations.end(), internal.begin(), internal.end());
    out.push_back(std::move(r));
  }
  if (want(kClaimTreeUpper)) {
    ScanReport r = report(kClaimTreeUpper);
    r.violations.insert(r.violations.end(), upper.begin(), upper.end());
    if (n >= 2 && n <= 4) {
      const Graph path = build({Family::path, n});
      const Rational value = NisEngine(path).s1_vertex_recursion().average;
      if (value != upper_bound) {
        r.violations.push_back(violation(path, "equality av1(P_" + std::to_string(n) +
                                                   ") = 2 + max(n-3,0)/2",
                                         "av1 = " + frac(value) + ", bound = " + frac(upper_bound),
                                         ViolationKind::equality));
      } else {
        r.notes.push_back("equality holds at P_" + std::to_string(n));
      }
    }
    out.push_back(std::move(r));
  }
  if (want(kClaimTreeBand) && n >= 9) {
    ScanReport r = report(kClaimTreeBand);
    const Rational best = *extremes.max();
    const Graph witness = extremes.max_witnesses().codes().begin()->representative();
    expect_lt(r, witness, Rational(n, 2), best, "n/2 < max av1(T)");
    expect_lt(r, witness, best, Rational(n + 1, 2), "max av1(T) < (n+1)/2");
    r.notes.push_back("delta_n = " + frac(best - Rational(n, 2)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ScanReport> ratio_claims(int n, const VerifyOptions& opt) {
  ScanReport r = make_report(kClaimRatioThird, "graphs:no-isolated-max-deg-2", n, opt.scan);
  r.objective = Objective::sigma_ratio;
  const Rational third(1, 3);
  for (const Graph& g : path_cycle_unions(n)) {
    const Rational ratio = sigma_ratio(g);
    r.extremes.offer(ratio, [&] { return canonical_code(g); });
    ++r.population_size;
    expect_le(r, g, third, ratio, "sigma1/sigma0 >= 1/3");
    const bool is_p2 = n == 2;
    if ((ratio == third) != is_p2) {
      r.violations.push_back(violation(g, "sigma1/sigma0 = 1/3 iff G = P_2", frac(ratio),
                                       ViolationKind::equality));
    }
    Rational sum = 0;
    for (VertexMask part : components(g, g.universe())) sum += sigma_ratio(induced(g, part).graph);
    if (sum != ratio) {
      r.violations.push_back(violation(g, "sigma1/sigma0 is additive over components",
                                       frac(sum) + " vs " + frac(ratio), ViolationKind::route));
    }
  }
  return {std::move(r)};
}

std::vector<ScanReport> r_family_claims(int n, const VerifyOptions& opt, const Selection& want) {
  const Graph g = build({Family::R, n});
  NisEngine engine(g);
  const NisSummary scalar = engine.s1_vertex_recursion();
  const Rational av1 = scalar.average;
  const Rational formula = r_family_av1(n);
  std::vector<ScanReport> out;
  const auto code = [&] { return canonical_code(g); };
  if (want(kClaimRClosedForm)) {
    ScanReport r = make_report(kClaimRClosedForm, "R_n", n, opt.scan);
    r.extremes.offer(av1, code);
    r.population_size = 1;
    if (av1 != formula || summarize(engine.i1_vertex_recursion()) != scalar ||
        closed_form_summary({Family::R, n}, 1) != scalar) {
      r.violations.push_back(violation(g, "engine av1(R_n) equals the closed form",
                                       frac(av1) + " vs " + frac(formula), ViolationKind::route));
    }
    expect_lt(r, g, av1, Rational(n + 1, 2), "av1(R_n) < (n+1)/2");
    out.push_back(std::move(r));
  }
  if (want(kClaimRAboveHalf)) {
    ScanReport r = make_report(kClaimRAboveHalf, "R_n", n, opt.scan);
    r.extremes.offer(av1, code);
    r.population_size = 1;
    const Rational half(n, 2);
    const bool excepted = n >= 6 && n <= 8;
    if (!excepted) {
      expect_lt(r, g, half, av1, "av1(R_n) > n/2 outside {6,7,8}");
    } else if (av1 == half) {
      r.violations.push_back(violation(g,
                                       "exception set {6,7,8}: strict inequality av1(R_n) > n/2 "
                                       "is claimed to fail",
                                       "av1(R_" + std::to_string(n) + ") = " + frac(av1) +
                                           " = n/2 exactly (equality, not strictly below)",
                                       ViolationKind::equality));
    } else {
      r.notes.push_back("av1(R_" + std::to_string(n) + ") = " + frac(av1) +
                        (av1 < half ? " < n/2" : " > n/2"));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ScanReport> conjecture_claims(int n, const VerifyOptions& opt) {
  auto rows = conjecture_scan(n, n, opt.scan);
  ConjectureRow& row = rows.front();
  ScanReport r = make_report(kClaimConjecture, "trees", n, opt.scan);
  for (const auto& c : row.max_witnesses.codes()) r.extremes.offer(row.max_value, [&] { return c; });
  r.population_size = count_free_trees(n);
  r.violations = row.violations;
  r.notes.push_back(std::string("R_n unique maximizer: ") + (row.r_is_unique_max ? "yes" : "no"));
  r.notes.push_back("av1(R_n) = " + frac(row.r_value) + ", max = " + frac(row.max_value) +
                    " (" + std::to_string(row.max_witnesses.total()) + " maximizers)");
  for (const auto& t : row.top) r.notes.push_back("top " + t.code.graph6() + " " + frac(t.value));
  return {std::move(r)};
}

bool blocking(const std::vector<ScanReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const ScanReport& r) { return r.has_blocking_violation(); });
}

}  // namespace

std::vector<Graph> path_cycle_unions(int n) {
  struct Piece {
    int size;
    bool cycle;
  };
  std::vector<Piece> kinds;
  for (int s = 2; s <= n; ++s) {
    kinds.push_back({s, false});
    if (s >= 3) kinds.push_back({s, true});
  }
  std::vector<Graph> out;
  std::vector<std::size_t> chosen;
  // multisets of pieces with non-decreasing kind index summing to n
  auto extend = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (remaining == 0) {
      Graph g;
      for (std::size_t k : chosen) {
        g = disjoint_union(g, build({kinds[k].cycle ? Family::cycle : Family::path, kinds[k].size}));
      }
      out.push_back(std::move(g));
      return;
    }
    for (std::size_t k = from; k < kinds.size(); ++k) {
      if (kinds[k].size > remaining) continue;
      chosen.push_back(k);
      self(self, k, remaining - kinds[k].size);
      chosen.pop_back();
    }
  };
  if (n >= 2) extend(extend, 0, n);
  return out;
}

std::vector<ScanReport> verify_claims(const VerifyOptions& opt) {
  const Selection want(opt.claims);
  std::vector<ScanReport> all;
  auto take = [&](std::vector<ScanReport> batch) {
    sort_violations(batch);
    const bool stop = opt.stop_on_blocking && blocking(batch);
    for (auto& r : batch) all.push_back(std::move(r));
    return stop;
  };

  const bool any_graph = want(kClaimGraphMin) || want(kClaimGraphMax) ||
                         want(kClaimDeltaSandwich) || want(kClaimEdgeBracket) ||
                         want(kClaimHelpSandwich);
  if (any_graph) {
    for (int n = 2; n <= opt.max_graph_order; ++n) {
      if (take(graph_claims(n, opt, want))) return all;
    }
  }
  if (want(kClaimRatioThird)) {
    for (int n = 2; n <= opt.max_path_cycle_order; ++n) {
      if (take(ratio_claims(n, opt))) return all;
    }
  }
  const bool any_tree = want(kClaimTreeMin) || want(kClaimTreeInternal) || want(kClaimTreeUpper) ||
                        want(kClaimTreeBand);
  if (any_tree) {
    for (int n = 2; n <= opt.max_tree_order; ++n) {
      if (take(tree_claims(n, opt, want))) return all;
    }
  }
  if (want(kClaimRClosedForm) || want(kClaimRAboveHalf)) {
    for (int n = 4; n <= opt.max_r_order; ++n) {
      if (take(r_family_claims(n, opt, want))) return all;
    }
  }
  if (want(kClaimConjecture)) {
    for (int n = 4; n <= opt.max_tree_order; ++n) {
      if (take(conjecture_claims(n, opt))) return all;
    }
  }
  return all;
}

}  // namespace nis
