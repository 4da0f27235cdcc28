#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nis {

enum class Command { compute, oracle, families, trees, scan, verify, conjecture };
enum class OutputFormat { text, csv, json };

struct OrderRange {
  int from = 0;
  int to = 0;
};

/// "a..b" or a single order "a". Throws std::invalid_argument.
OrderRange parse_order_range(std::string_view text);

struct RunConfig {
  Command command = Command::compute;

  // Graph input for compute/oracle: at most one of these is used, in this
  // order of precedence. `input_path` "-" reads stdin.
  std::string graph6;
  std::string edges;  // edge-list text; '/' also separates lines
  std::string input_path;
  bool batch = false;  // newline-delimited graph6 input

  int level = 1;
  std::optional<OrderRange> orders;
  std::string family;  // empty: every family with a closed form
  std::string emit = "graph6";
  std::string population = "trees";
  std::string objective = "av1";
  std::string filter = "all";
  std::string claims = "all";
  int max_tree_order = 16;
  int max_graph_order = 7;
  int max_path_cycle_order = 10;
  int max_r_order = 40;

  std::optional<OutputFormat> output_format;  // per-command default when absent
  std::string output_path;  // empty: standard output
  int worker_count = 1;
  double oracle_spot_check_rate = 0.01;
  std::uint64_t seed = 0x6e6973ULL;
};

/// Throws std::invalid_argument or LimitError on an invalid configuration.
void validate(const RunConfig& config);

/// Exit status: 0 success, 1 an inequality violation or route disagreement,
/// 2 invalid input or configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11 front end, including --config files) and runs.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nis
