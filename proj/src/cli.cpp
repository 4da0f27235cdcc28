#include "nis/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "nis/claims.hpp"
#include "nis/engine.hpp"
#include "nis/error.hpp"
#include "nis/families.hpp"
#include "nis/oracle.hpp"
#include "nis/report.hpp"
#include "nis/scanner.hpp"
#include "nis/tree_forge.hpp"

namespace nis {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

// ParseError from a single-line reader, moved to line `line` of a batch.
[[noreturn]] void rethrow_at_line(const ParseError& e, std::size_t line) {
  std::string message = e.what();
  const auto colon = message.find(": ");
  if (colon != std::string::npos) message = message.substr(colon + 2);
  throw ParseError(message, line, e.column());
}

bool looks_like_edge_list(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    return t.find_first_of(" \t") != std::string::npos;
  }
  return false;
}

std::vector<Graph> load_graphs(const RunConfig& c) {
  std::string text;
  bool is_graph6 = false;
  if (!c.graph6.empty()) {
    text = c.graph6;
    is_graph6 = true;
  } else if (!c.edges.empty()) {
    // one line per '/'-separated piece, so error columns count from the piece start
    std::istringstream pieces(c.edges);
    std::string piece;
    while (std::getline(pieces, piece, '/')) text += trim(piece) + "\n";
  } else if (!c.input_path.empty()) {
    text = read_source(c.input_path);
    is_graph6 = c.batch || !looks_like_edge_list(text);
  } else {
    throw std::invalid_argument("no graph input: give --graph6, --edges or --input");
  }

  std::vector<Graph> graphs;
  if (c.batch) {
    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
      ++number;
      const std::string t = trim(line);
      if (t.empty()) continue;
      try {
        graphs.push_back(from_graph6(t));
      } catch (const ParseError& e) {
        rethrow_at_line(e, number);
      }
    }
    return graphs;
  }
  graphs.push_back(is_graph6 ? from_graph6(trim(text)) : parse_edge_list(text));
  return graphs;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  const char* dir = std::getenv("NISLAB_OUTPUT_DIR");
  if (p.is_relative() && dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  return p;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& body) {
  if (c.output_path.empty()) {
    out << body;
    return;
  }
  const auto path = resolve_output(c.output_path);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write output file '" + path.string() + "'");
  file << body;
}

OutputFormat format_or(const RunConfig& c, OutputFormat fallback) {
  return c.output_format.value_or(fallback);
}

std::string fraction_with_decimal(const Rational& r) {
  return to_fraction_string(r) + " (" + to_decimal_string(r) + ")";
}

std::string join_coefficients(const CountPolynomial& p, const char* sep) {
  std::string s;
  for (const auto& c : p.coefficients()) {
    if (!s.empty()) s += sep;
    s += c.str();
  }
  return s.empty() ? "0" : s;
}

json coefficients_json(const CountPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

std::string vertex_set(VertexMask m) {
  std::string s = "{";
  for (int v : m) {
    if (s.size() > 1) s += ",";
    s += std::to_string(v);
  }
  return s + "}";
}

// compute ------------------------------------------------------------------

struct GraphStats {
  Graph graph;
  CountPolynomial i0;
  CountPolynomial i1;
  NisSummary s0;
  NisSummary s1;
  std::vector<EdgeTerm> terms;
  std::vector<std::string> disagreements;
};

GraphStats compute_stats(const Graph& g) {
  GraphStats st;
  st.graph = g;
  NisEngine engine(g);
  st.i0 = engine.i0();
  st.i1 = engine.i1_vertex_recursion();
  st.s0 = summarize(st.i0);
  st.s1 = summarize(st.i1);
  if (engine.i1_edge_decomposition() != st.i1) {
    st.disagreements.push_back("I1 vertex recursion differs from edge decomposition");
  }
  const ScalarCounts& scalar = engine.scalar_counts();
  if (scalar.summary0() != st.s0) st.disagreements.push_back("scalar l=0 counts differ from I0");
  if (scalar.summary1() != st.s1) st.disagreements.push_back("scalar l=1 counts differ from I1");
  if (g.edge_count() > 0) st.terms = engine.edge_terms();
  return st;
}

void write_text(std::ostream& o, const GraphStats& st) {
  o << "graph6 " << to_graph6(st.graph) << "\n";
  o << "n " << st.graph.order() << "\n";
  o << "edges " << st.graph.edge_count() << "\n";
  o << "sigma0 " << st.s0.sigma << "\n";
  o << "S0 " << st.s0.total << "\n";
  o << "av0 " << fraction_with_decimal(st.s0.average) << "\n";
  o << "sigma1 " << st.s1.sigma << "\n";
  o << "S1 " << st.s1.total << "\n";
  o << "av1 " << fraction_with_decimal(st.s1.average) << "\n";
  if (st.s1.has_no_sets()) o << "note no 1-nearly independent sets\n";
  o << "I0 " << join_coefficients(st.i0, " ") << "\n";
  o << "I1 " << join_coefficients(st.i1, " ") << "\n";
  if (!st.terms.empty()) {
    o << "edge residual sigma0 S0 weight av1_edge\n";
    for (const auto& t : st.terms) {
      o << t.edge.u << "-" << t.edge.v << " " << vertex_set(t.residual) << " " << t.sigma0 << " "
        << t.total0 << " " << to_fraction_string(t.weight) << " "
        << to_fraction_string(2 + t.residual_average()) << "\n";
    }
  }
  for (const auto& d : st.disagreements) o << "route-disagreement " << d << "\n";
}

json to_compute_json(const GraphStats& st) {
  json terms = json::array();
  for (const auto& t : st.terms) {
    json residual = json::array();
    for (int v : t.residual) residual.push_back(v);
    terms.push_back({{"u", t.edge.u},
                     {"v", t.edge.v},
                     {"residual", residual},
                     {"sigma0", t.sigma0.str()},
                     {"S0", t.total0.str()},
                     {"weight", to_fraction_string(t.weight)},
                     {"av1_edge", to_fraction_string(2 + t.residual_average())}});
  }
  return {{"graph6", to_graph6(st.graph)},
          {"n", st.graph.order()},
          {"edges", st.graph.edge_count()},
          {"sigma0", st.s0.sigma.str()},
          {"S0", st.s0.total.str()},
          {"av0", to_fraction_string(st.s0.average)},
          {"sigma1", st.s1.sigma.str()},
          {"S1", st.s1.total.str()},
          {"av1", to_fraction_string(st.s1.average)},
          {"no_1_nearly_independent_sets", st.s1.has_no_sets()},
          {"I0", coefficients_json(st.i0)},
          {"I1", coefficients_json(st.i1)},
          {"edge_terms", terms},
          {"route_disagreements", st.disagreements}};
}

int run_compute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(c);
  std::vector<GraphStats> stats;
  stats.reserve(graphs.size());
  bool agree = true;
  for (const auto& g : graphs) {
    stats.push_back(compute_stats(g));
    agree = agree && stats.back().disagreements.empty();
  }

  std::ostringstream o;
  switch (format_or(c, OutputFormat::text)) {
    case OutputFormat::text:
      for (std::size_t i = 0; i < stats.size(); ++i) {
        if (i > 0) o << "\n";
        write_text(o, stats[i]);
      }
      break;
    case OutputFormat::csv:
      o << "graph6,n,edges,sigma0,S0,av0,sigma1,S1,av1,routes_agree\n";
      for (const auto& st : stats) {
        o << to_graph6(st.graph) << "," << st.graph.order() << "," << st.graph.edge_count() << ","
          << st.s0.sigma << "," << st.s0.total << "," << to_fraction_string(st.s0.average) << ","
          << st.s1.sigma << "," << st.s1.total << "," << to_fraction_string(st.s1.average) << ","
          << (st.disagreements.empty() ? "yes" : "no") << "\n";
      }
      break;
    case OutputFormat::json: {
      json doc;
      if (c.batch) {
        doc = json::array();
        for (const auto& st : stats) doc.push_back(to_compute_json(st));
      } else {
        doc = to_compute_json(stats.front());
      }
      o << doc.dump(2) << "\n";
      break;
    }
  }
  emit(c, out, o.str());
  if (!agree) err << "error: computation routes disagree\n";
  return agree ? kExitOk : kExitViolation;
}

// oracle -------------------------------------------------------------------

int run_oracle(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(c);
  std::ostringstream o;
  json docs = json::array();
  bool agree = true;
  const OutputFormat fmt = format_or(c, OutputFormat::text);
  if (fmt == OutputFormat::csv) o << "graph6,l,sigma,S,av,by_size,engine_agrees\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const OracleProfile profile = oracle_profile(g, c.level);
    const CountPolynomial poly = profile.polynomial();
    const NisSummary s = summarize(poly);
    std::string check = "n/a";
    if (c.level <= 1) {
      NisEngine engine(g);
      const CountPolynomial& mine = c.level == 0 ? engine.i0() : engine.i1_vertex_recursion();
      const bool same = mine == poly;
      agree = agree && same;
      check = same ? "yes" : "no";
    }
    std::string sizes;
    for (auto k : profile.by_size) sizes += (sizes.empty() ? "" : " ") + std::to_string(k);
    switch (fmt) {
      case OutputFormat::text:
        if (i > 0) o << "\n";
        o << "graph6 " << to_graph6(g) << "\nl " << c.level << "\nsigma " << s.sigma << "\nS " << s.total
          << "\nav " << fraction_with_decimal(s.average) << "\nby_size " << sizes
          << "\nengine_agrees " << check << "\n";
        break;
      case OutputFormat::csv:
        o << to_graph6(g) << "," << c.level << "," << s.sigma << "," << s.total << ","
          << to_fraction_string(s.average) << "," << sizes << "," << check << "\n";
        break;
      case OutputFormat::json:
        docs.push_back({{"graph6", to_graph6(g)},
                        {"l", c.level},
                        {"sigma", s.sigma.str()},
                        {"S", s.total.str()},
                        {"av", to_fraction_string(s.average)},
                        {"by_size", profile.by_size},
                        {"engine_agrees", check}});
        break;
    }
  }
  if (fmt == OutputFormat::json) o << (c.batch ? docs : docs.front()).dump(2) << "\n";
  emit(c, out, o.str());
  if (!agree) err << "error: engine disagrees with the subset oracle\n";
  return agree ? kExitOk : kExitViolation;
}

// families -----------------------------------------------------------------

int run_families(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<Family> families;
  if (c.family.empty()) {
    for (Family f : all_families()) {
      if (f != Family::cycle) families.push_back(f);
    }
  } else {
    families.push_back(parse_family(c.family));
    if (families.front() == Family::cycle) {
      throw std::invalid_argument("cycles have no closed form; use compute on the cycle instead");
    }
  }
  const OrderRange orders = c.orders.value_or(OrderRange{1, 20});
  const std::string l = std::to_string(c.level);

  std::ostringstream o;
  json rows = json::array();
  bool agree = true;
  const OutputFormat fmt = format_or(c, OutputFormat::csv);
  if (fmt != OutputFormat::json) {
    o << "family,n,sigma" << l << ",S" << l << ",av" << l << "_numerator,av" << l
      << "_denominator,av" << l << ",engine_agrees\n";
  }
  for (Family f : families) {
    for (int n = std::max(orders.from, std::max(1, family_min_order(f))); n <= orders.to; ++n) {
      const FamilySpec spec{f, n};
      const NisSummary closed = closed_form_summary(spec, c.level);
      NisEngine engine(build(spec));
      const NisSummary engine_value = c.level == 0 ? engine.summary0() : engine.summary1();
      const bool same = engine_value == closed;
      agree = agree && same;
      const auto num = numerator(closed.average);
      const auto den = denominator(closed.average);
      if (fmt == OutputFormat::json) {
        rows.push_back({{"family", std::string(family_name(f))},
                        {"n", n},
                        {"sigma" + l, closed.sigma.str()},
                        {"S" + l, closed.total.str()},
                        {"av" + l, to_fraction_string(closed.average)},
                        {"engine_agrees", same}});
      } else {
        o << family_name(f) << "," << n << "," << closed.sigma << "," << closed.total << "," << num
          << "," << den << "," << to_fraction_string(closed.average) << "," << (same ? "yes" : "no")
          << "\n";
      }
    }
  }
  if (fmt == OutputFormat::json) o << rows.dump(2) << "\n";
  emit(c, out, o.str());
  if (!agree) err << "error: closed form and engine disagree\n";
  return agree ? kExitOk : kExitViolation;
}

// trees --------------------------------------------------------------------

int run_trees(const RunConfig& c, std::ostream& out) {
  const OrderRange orders = *c.orders;
  std::ostringstream o;
  for (int n = orders.from; n <= orders.to; ++n) {
    if (c.emit == "count") {
      if (orders.from != orders.to) o << n << " ";
      o << count_free_trees(n) << "\n";
      continue;
    }
    FreeTreeGenerator gen(n);
    do {
      if (c.emit == "levels") {
        const auto seq = gen.levels();
        for (std::size_t i = 0; i < seq.levels.size(); ++i) o << (i ? " " : "") << seq.levels[i];
        o << "\n";
      } else {
        o << to_graph6(gen.graph()) << "\n";
      }
    } while (gen.next());
  }
  emit(c, out, o.str());
  return kExitOk;
}

// scan / verify / conjecture -------------------------------------------------

ScanOptions scan_options(const RunConfig& c) {
  ScanOptions s;
  s.workers = c.worker_count;
  s.spot_check_rate = c.oracle_spot_check_rate;
  s.seed = c.seed;
  return s;
}

int report_reports(const RunConfig& c, const std::vector<ScanReport>& reports, std::ostream& out,
                   std::ostream& err) {
  bool blocking = false;
  for (const auto& r : reports) blocking = blocking || r.has_blocking_violation();
  std::ostringstream o;
  if (format_or(c, OutputFormat::json) == OutputFormat::json) {
    o << to_json(reports).dump(2) << "\n";
    emit(c, out, o.str());
    if (!c.output_path.empty()) {
      for (const auto& r : reports) out << summary_line(r) << "\n";
    }
  } else {
    for (const auto& r : reports) o << summary_line(r) << "\n";
    emit(c, out, o.str());
  }
  if (blocking) err << "error: inequality or route violations found\n";
  return blocking ? kExitViolation : kExitOk;
}

int run_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Objective objective = parse_objective(c.objective);
  const ScanOptions options = scan_options(c);
  std::vector<ScanReport> reports;
  for (int n = c.orders->from; n <= c.orders->to; ++n) {
    if (c.population == "trees") {
      reports.push_back(scan_trees(n, objective, options));
    } else {
      reports.push_back(scan_graphs(n, parse_filter(c.filter), objective, options));
    }
  }
  return report_reports(c, reports, out, err);
}

std::set<std::string> parse_claim_list(const std::string& text) {
  std::set<std::string> chosen;
  if (text == "all") return chosen;
  const auto known = claim_ids();
  std::istringstream in(text);
  std::string id;
  while (std::getline(in, id, ',')) {
    id = trim(id);
    if (id.empty()) continue;
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw std::invalid_argument("unknown claim '" + id + "'");
    }
    chosen.insert(id);
  }
  return chosen;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.max_graph_order = c.max_graph_order;
  opt.max_tree_order = c.max_tree_order;
  opt.max_path_cycle_order = c.max_path_cycle_order;
  opt.max_r_order = c.max_r_order;
  opt.claims = parse_claim_list(c.claims);
  opt.scan = scan_options(c);
  return report_reports(c, verify_claims(opt), out, err);
}

int run_conjecture(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto rows = conjecture_scan(c.orders->from, c.orders->to, scan_options(c));
  bool route_ok = true;
  std::ostringstream o;
  const OutputFormat fmt = format_or(c, OutputFormat::csv);
  json docs = json::array();
  if (fmt != OutputFormat::json) o << "order,max_av1,r_av1,r_is_unique_max,max_witnesses,top\n";
  for (const auto& row : rows) {
    route_ok = route_ok && row.violations.empty();
    if (fmt == OutputFormat::json) {
      docs.push_back(to_json(row));
      continue;
    }
    std::string top;
    for (const auto& t : row.top) {
      top += (top.empty() ? "" : " ") + t.code.graph6() + ":" + to_fraction_string(t.value);
    }
    o << row.order << "," << to_fraction_string(row.max_value) << "," << to_fraction_string(row.r_value)
      << "," << (row.r_is_unique_max ? "yes" : "no") << "," << row.max_witnesses.total() << "," << top
      << "\n";
  }
  if (fmt == OutputFormat::json) o << docs.dump(2) << "\n";
  emit(c, out, o.str());
  if (!route_ok) err << "error: oracle spot checks disagree with the engine\n";
  return route_ok ? kExitOk : kExitViolation;
}

void require_orders(const RunConfig& c, const char* what) {
  if (!c.orders) throw std::invalid_argument(std::string(what) + " needs --order or --orders");
}

void check_range(const OrderRange& r, int lo, int hi, const std::string& cap) {
  if (r.from < lo || r.to > hi) {
    throw LimitError("orders " + std::to_string(r.from) + ".." + std::to_string(r.to) + " outside " +
                     cap + " range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

}  // namespace

OrderRange parse_order_range(std::string_view text) {
  const std::string t = trim(text);
  const auto dots = t.find("..");
  OrderRange r;
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.from = r.to = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } else {
      const std::string a = t.substr(0, dots);
      const std::string b = t.substr(dots + 2);
      r.from = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(t);
      r.to = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(t);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("order range must look like 'a..b' or 'a', got '" + t + "'");
  }
  if (r.from > r.to) throw std::invalid_argument("empty order range '" + t + "'");
  return r;
}

void validate(const RunConfig& c) {
  if (!(c.oracle_spot_check_rate >= 0.0 && c.oracle_spot_check_rate <= 1.0)) {
    throw std::invalid_argument("spot-check rate must lie in [0, 1]");
  }
  if (c.worker_count < 1) throw std::invalid_argument("worker count must be at least 1");
  switch (c.command) {
    case Command::compute:
      break;
    case Command::oracle:
      if (c.level < 0) throw std::invalid_argument("l must be non-negative");
      break;
    case Command::families:
      if (c.level != 0 && c.level != 1) throw std::invalid_argument("closed forms exist for l = 0, 1 only");
      if (c.orders) check_range(*c.orders, 1, kMaxOrder, "graph-core");
      break;
    case Command::trees:
      require_orders(c, "trees");
      check_range(*c.orders, 1, kMaxTreeOrder, "tree-forge");
      if (c.emit != "graph6" && c.emit != "levels" && c.emit != "count") {
        throw std::invalid_argument("--emit must be graph6, levels or count");
      }
      break;
    case Command::scan:
      require_orders(c, "scan");
      if (c.population == "trees") {
        check_range(*c.orders, 2, kMaxTreeOrder, "tree scan");
      } else if (c.population == "graphs") {
        check_range(*c.orders, 2, kMaxGraphScanOrder, "graph scan");
        parse_filter(c.filter);
      } else {
        throw std::invalid_argument("--population must be trees or graphs");
      }
      parse_objective(c.objective);
      break;
    case Command::verify:
      check_range({2, c.max_graph_order}, 2, kMaxGraphScanOrder, "graph scan");
      check_range({2, c.max_tree_order}, 2, kMaxTreeOrder, "tree scan");
      check_range({2, c.max_path_cycle_order}, 2, kMaxCanonicalOrder, "path/cycle union");
      check_range({4, c.max_r_order}, 4, kMaxOrder, "graph-core");
      parse_claim_list(c.claims);
      break;
    case Command::conjecture:
      require_orders(c, "conjecture");
      check_range(*c.orders, 4, kMaxTreeOrder, "conjecture scan");
      break;
  }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    switch (c.command) {
      case Command::compute: return run_compute(c, out, err);
      case Command::oracle: return run_oracle(c, out, err);
      case Command::families: return run_families(c, out, err);
      case Command::trees: return run_trees(c, out);
      case Command::scan: return run_scan(c, out, err);
      case Command::verify: return run_verify(c, out, err);
      case Command::conjecture: return run_conjecture(c, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of nearly independent vertex sets"};
  app.set_config("--config", "", "TOML or INI file with the same keys as the flags");
  app.require_subcommand(1);

  RunConfig c;
  std::string format;
  std::string orders;
  int single_order = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", c.output_path, "output file (relative to $NISLAB_OUTPUT_DIR when set)");
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--graph6", c.graph6, "inline graph6 string");
    sub->add_option("--edges", c.edges, "inline edge list, lines separated by '/'");
    sub->add_option("--input,-i", c.input_path, "file with a graph6 string or an edge list; '-' for stdin");
    sub->add_flag("--batch", c.batch, "input holds one graph6 string per line");
  };
  const auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--workers", c.worker_count, "worker threads");
    sub->add_option("--spot-check-rate", c.oracle_spot_check_rate, "fraction of items re-checked by brute force");
    sub->add_option("--seed", c.seed, "spot-check sampling seed");
  };

  auto* compute = app.add_subcommand("compute", "statistics of one graph (or a batch)");
  add_input(compute);
  add_common(compute);

  auto* oracle = app.add_subcommand("oracle", "brute-force subset counts");
  add_input(oracle);
  add_common(oracle);
  oracle->add_option("--l", c.level, "number of induced edges");

  auto* families = app.add_subcommand("families", "closed-form table for the named families");
  add_common(families);
  families->add_option("--family", c.family, "edgeless, star, complete, path, R or G");
  families->add_option("--n", single_order, "single order");
  families->add_option("--orders", orders, "order range a..b");
  families->add_option("--l", c.level, "0 or 1");

  auto* trees = app.add_subcommand("trees", "stream the free trees of an order");
  add_common(trees);
  trees->add_option("--order,--n", single_order, "tree order");
  trees->add_option("--orders", orders, "order range a..b");
  trees->add_option("--emit", c.emit, "graph6, levels or count");

  auto* scan = app.add_subcommand("scan", "exact extremes over a population");
  add_common(scan);
  add_scan(scan);
  scan->add_option("--population", c.population, "trees or graphs");
  scan->add_option("--order,--n", single_order, "order");
  scan->add_option("--orders", orders, "order range a..b");
  scan->add_option("--objective", c.objective, "av1, av0, sigma1 or sigma1/sigma0");
  scan->add_option("--filter", c.filter, "all, connected, no-isolated-max-deg-2 or non-edgeless");

  auto* verify = app.add_subcommand("verify", "run the claim suites");
  add_common(verify);
  add_scan(verify);
  verify->add_option("--claims", c.claims, "'all' or a comma-separated list of claim ids");
  verify->add_option("--max-tree-order", c.max_tree_order);
  verify->add_option("--max-graph-order", c.max_graph_order);
  verify->add_option("--max-path-cycle-order", c.max_path_cycle_order);
  verify->add_option("--max-r-order", c.max_r_order);

  auto* conjecture = app.add_subcommand("conjecture", "is R_n the unique av1 maximizer among trees");
  add_common(conjecture);
  add_scan(conjecture);
  conjecture->add_option("--orders", orders, "order range a..b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {compute, Command::compute}, {oracle, Command::oracle},   {families, Command::families},
      {trees, Command::trees},     {scan, Command::scan},       {verify, Command::verify},
      {conjecture, Command::conjecture}};
  for (const auto& [sub, command] : table) {
    if (sub->parsed()) c.command = command;
  }
  try {
    if (!format.empty()) {
      c.output_format = format == "text" ? OutputFormat::text
                        : format == "csv" ? OutputFormat::csv
                                          : OutputFormat::json;
    }
    if (!orders.empty()) {
      c.orders = parse_order_range(orders);
    } else if (single_order != 0) {
      c.orders = OrderRange{single_order, single_order};
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return run(c, out, err);
}

}  // namespace nis
