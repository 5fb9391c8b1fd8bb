#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ahull/hull.hpp"
#include "ahull/io.hpp"

namespace ahull::cli {

using io::json;

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kEscalation = 3 };

/// Command-line settings. Unset optionals defer to the input document, then to library defaults.
struct JobConfig {
  std::optional<Mode> mode;
  std::optional<std::uint64_t> prime;
  std::optional<unsigned> prime_search_limit;
  std::optional<std::uint64_t> seed;
  std::optional<Rational> delta;
  std::optional<Route> route;
  std::optional<std::string> group_path;
  bool trust_assertion = false;
  bool verbose = false;
  bool timings = false;
  std::optional<std::string> out_path;
  std::optional<std::string> gnuplot_path;
};

struct CommandResult {
  int exit_code = kOk;
  json output;
  std::string diagnostic;
};

CommandResult cmd_hull(const json& input, const JobConfig& config);
CommandResult cmd_relations(const json& input, const JobConfig& config);
CommandResult cmd_iszero(const json& input, const JobConfig& config);
CommandResult cmd_lll(const json& input, const JobConfig& config);
CommandResult cmd_jordan(const json& input, const JobConfig& config);
CommandResult cmd_oracle_deg4(const json& input, const JobConfig& config);
CommandResult cmd_oracle_deg6(const json& input, const JobConfig& config);

struct CorpusEntry {
  std::string label;
  std::optional<IntPolynomial> poly;
  std::optional<RatMatrix> matrix;
  std::optional<std::uint64_t> group_order;
  /// Derived-group recipe name or explicit 1-based generators.
  json group;
  std::optional<std::size_t> expected_dim;
};

/// Throws std::invalid_argument on a malformed corpus.
std::vector<CorpusEntry> parse_corpus(const json& corpus);

struct BenchRow {
  std::string label;
  std::string route;
  std::string mode;
  std::uint64_t p = 0;
  unsigned f_p = 0;
  unsigned k = 0;
  double seconds = 0;
  double prime_seconds = 0;
  std::size_t dim = 0;
  bool ok = false;
  std::optional<std::uint64_t> group_order;
  std::string note;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::size_t failures = 0;
  std::size_t mismatches = 0;
  double total_seconds = 0;
  /// Header label,route,mode,p,f_p,k,seconds,dim,ok.
  std::string csv() const;
  /// Whitespace-separated: log(group order), seconds, route, label. Rows without a known order are skipped.
  std::string gnuplot() const;
  json summary() const;
};

/// Runs routes A (lll), B (galois) and, where its preconditions hold, the fast path on every entry.
/// Per-entry failures are recorded in their rows and do not stop the run.
BenchReport cmd_bench(const std::vector<CorpusEntry>& corpus, const JobConfig& config);

/// Full command line: parses arguments, reads input, writes output. Returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ahull::cli
