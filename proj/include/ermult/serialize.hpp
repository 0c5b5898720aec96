#pragma once

#include "ermult/multiplet.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ermult {

enum class OutputFormat { json, dot, table };

struct RunConfig {
  AlgebraTag algebra = AlgebraTag::so_star;
  int rank = 6;
  std::optional<std::vector<long>> labels;  // nullopt: symbolic
  bool reduced_only = true;
  OutputFormat format = OutputFormat::table;
  bool verify = false;
  std::string output;  // empty: stdout
  bool split_any_rank = false;
  unsigned seed = 20140701;  // verification oracle RNG seed
  ExecMode exec = ExecMode::serial;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the CLI flag vector (without argv[0]).  Throws UsageError on any
// invalid combination; --help raises HelpRequested handled by the driver.
RunConfig parse_args(const std::vector<std::string>& args);

// Serializers are deterministic: identical multiplets produce byte-identical
// output.  All of them refuse an inconsistent multiplet (wrong vertex count,
// dangling edge ids) with std::invalid_argument.
std::string emit_json(const Multiplet& m, bool reduced_only);
std::string emit_dot(const Multiplet& m, bool reduced_only);
std::string emit_table(const Multiplet& m);

std::string algebra_display_name(AlgebraTag tag, int rank);

}  // namespace ermult
