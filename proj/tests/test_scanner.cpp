#include "doctest.h"
#include "nis/claims.hpp"
#include "nis/error.hpp"
#include "nis/families.hpp"
#include "nis/report.hpp"
#include "nis/scanner.hpp"
#include "nis/tree_forge.hpp"
#include "oracles.hpp"

using namespace nis;

TEST_CASE("witness lists keep the smallest codes") {
  WitnessList w(2);
  for (const char* s : {"D", "B", "C", "A"}) w.add(CanonicalCode(s));
  CHECK(w.total() == 4);
  CHECK(w.truncated());
  CHECK(w.codes().size() == 2);
  CHECK(w.codes().begin()->graph6() == "A");
  WitnessList other(2);
  other.add(CanonicalCode("0"));
  w.merge(other);
  CHECK(w.total() == 5);
  CHECK(w.codes().begin()->graph6() == "0");
}

TEST_CASE("extremes only canonicalize candidates") {
  Extremes e;
  int calls = 0;
  auto code = [&](const char* s) {
    return [&calls, s] {
      ++calls;
      return CanonicalCode(s);
    };
  };
  e.offer(3, code("a"));
  e.offer(5, code("b"));
  e.offer(4, code("c"));
  e.offer(5, code("d"));
  e.offer(3, code("e"));
  CHECK(calls == 4);
  CHECK(*e.min() == 3);
  CHECK(*e.max() == 5);
  CHECK(e.min_witnesses().total() == 2);
  CHECK(e.max_witnesses().total() == 2);

  Extremes f;
  f.offer(1, code("z"));
  e.merge(f);
  CHECK(*e.min() == 1);
  CHECK(e.min_witnesses().total() == 1);
  CHECK(e.max_witnesses().total() == 2);
}

TEST_CASE("spot-check sampling") {
  int picked = 0;
  for (std::uint64_t i = 0; i < 100000; ++i) picked += spot_check_selected(1, 10, i, 0.01);
  CHECK(picked > 800);
  CHECK(picked < 1200);
  CHECK_FALSE(spot_check_selected(1, 10, 5, 0.0));
  CHECK(spot_check_selected(1, 10, 5, 1.0));
  CHECK(spot_check_selected(7, 3, 42, 0.5) == spot_check_selected(7, 3, 42, 0.5));
}

TEST_CASE("isomorphism class counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};  // OEIS A000088
  for (int n = 0; n <= kMaxGraphScanOrder; ++n) CHECK(graph_classes(n).size() == expected[n]);
  CHECK_THROWS_AS(graph_classes(8), LimitError);
}

TEST_CASE("graph class representatives are canonical and distinct") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> brute;
    for (const Graph& g : graph_classes(n)) {
      CHECK(canonical_code(g).representative() == g);
      brute.insert(oracle::brute_canonical(g));
    }
    CHECK(brute.size() == graph_classes(n).size());
  }
}

TEST_CASE("filters") {
  // connected graphs, OEIS A001349
  const std::uint64_t connected[] = {0, 0, 1, 2, 6, 21, 112, 853};
  for (int n = 2; n <= 7; ++n) {
    CHECK(scan_graphs(n, GraphFilter::connected, Objective::av0).population_size == connected[n]);
    CHECK(scan_graphs(n, GraphFilter::no_isolated_max_degree2, Objective::sigma_ratio).population_size ==
          path_cycle_unions(n).size());
  }
  CHECK(scan_graphs(5, GraphFilter::all, Objective::av1).population_size == 33);
  CHECK(scan_graphs(5, GraphFilter::all, Objective::av0).population_size == 34);
  CHECK_THROWS_AS(scan_graphs(8, GraphFilter::all, Objective::av1), LimitError);
  CHECK_THROWS_AS(scan_trees(25, Objective::av1), LimitError);
}

TEST_CASE("path and cycle unions are distinct and complete") {
  for (int n = 2; n <= 10; ++n) {
    std::set<CanonicalCode> codes;
    for (const Graph& g : path_cycle_unions(n)) {
      CHECK(g.order() == n);
      CHECK(passes_filter(g, GraphFilter::no_isolated_max_degree2));
      codes.insert(canonical_code(g));
    }
    CHECK(codes.size() == path_cycle_unions(n).size());
  }
  CHECK(path_cycle_unions(4).size() == 3);  // P4, C4, 2P2
}

TEST_CASE("tree scans find the star as minimum") {
  for (int n = 3; n <= 12; ++n) {
    const ScanReport r = scan_trees(n, Objective::av1);
    CHECK(r.population_size == count_free_trees(n));
    CHECK(*r.extremes.min() == 2);
    CHECK(r.extremes.min_witnesses().total() == 1);
    CHECK(*r.extremes.min_witnesses().codes().begin() == canonical_code(build({Family::star, n})));
    CHECK(r.violations.empty());
  }
}

TEST_CASE("results do not depend on the worker count") {
  ScanOptions one;
  one.spot_check_rate = 0.2;
  ScanOptions three = one;
  three.workers = 3;
  for (Objective o : {Objective::av1, Objective::sigma1}) {
    CHECK(to_json(scan_trees(13, o, one)) == to_json(scan_trees(13, o, three)));
    CHECK(to_json(scan_graphs(6, GraphFilter::all, o, one)) ==
          to_json(scan_graphs(6, GraphFilter::all, o, three)));
  }
  VerifyOptions a;
  a.max_graph_order = 5;
  a.max_tree_order = 11;
  a.max_path_cycle_order = 8;
  a.max_r_order = 12;
  a.scan = one;
  VerifyOptions b = a;
  b.scan = three;
  CHECK(to_json(verify_claims(a)).dump() == to_json(verify_claims(b)).dump());
  const auto c1 = conjecture_scan(8, 10, one);
  const auto c3 = conjecture_scan(8, 10, three);
  REQUIRE(c1.size() == c3.size());
  for (std::size_t i = 0; i < c1.size(); ++i) CHECK(to_json(c1[i]) == to_json(c3[i]));
}

TEST_CASE("witness cap bounds reported lists") {
  ScanOptions opt;
  opt.witness_cap = 3;
  const ScanReport r = scan_graphs(5, GraphFilter::all, Objective::av1, opt);
  CHECK(r.extremes.min_witnesses().codes().size() <= 3);
  CHECK(r.extremes.min_witnesses().total() >= r.extremes.min_witnesses().codes().size());
}

TEST_CASE("verify records discrepancies without failing") {
  VerifyOptions opt;
  opt.max_graph_order = 4;
  opt.max_tree_order = 6;
  opt.max_path_cycle_order = 6;
  opt.max_r_order = 10;
  const auto reports = verify_claims(opt);
  bool p4 = false, r6 = false;
  for (const auto& r : reports) {
    CHECK_FALSE(r.has_blocking_violation());
    if (r.claim_id == kClaimTreeUpper && r.order == 4) p4 = !r.violations.empty();
    if (r.claim_id == kClaimRAboveHalf && r.order == 6) r6 = !r.violations.empty();
  }
  CHECK(p4);
  CHECK(r6);

  opt.claims = {kClaimTreeMin};
  for (const auto& r : verify_claims(opt)) CHECK(r.claim_id == kClaimTreeMin);
}

TEST_CASE("report json shape") {
  VerifyOptions opt;
  opt.max_graph_order = 3;
  opt.claims = {kClaimGraphMin};
  const auto doc = to_json(verify_claims(opt));
  const auto& first = doc["reports"][0];
  CHECK(first["claim_id"] == "graph_min_av1");
  CHECK(first["status"] == "pass");
  CHECK(first["extremal"]["min"] == "2");
  CHECK(first["witnesses"].is_array());
  CHECK(first["violations"].empty());
}
