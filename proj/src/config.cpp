#include "ermult/serialize.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace ermult {

namespace {

std::optional<std::vector<long>> parse_labels(const std::string& spec, int rank) {
  if (spec == "symbolic") return std::nullopt;
  std::vector<long> labels;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      labels.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad label '" + item + "': expected a positive integer");
    }
  }
  if (static_cast<int>(labels.size()) != rank)
    throw UsageError("expected " + std::to_string(rank) + " labels, got " +
                     std::to_string(labels.size()));
  for (long v : labels)
    if (v < 1)
      throw UsageError("labels must be >= 1 (degenerate m_i = 0 limits are rejected)");
  return labels;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"exact multiplet diagrams of elementary representations"};
  app.name("ermult");

  std::string algebra = "so-star";
  std::string labels = "symbolic";
  std::string edges = "reduced";
  std::string format = "table";
  RunConfig cfg;

  app.add_option("--algebra", algebra, "so-star or so-split")
      ->check(CLI::IsMember({"so-star", "so-split"}));
  app.add_option("--rank", cfg.rank, "rank n (even, >= 4)");
  app.add_option("--labels", labels, "'symbolic' or a comma list of positive integers");
  app.add_option("--edges", edges, "reduced (non-composite arrows) or all")
      ->check(CLI::IsMember({"reduced", "all"}));
  app.add_option("--format", format, "json, dot or table")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_flag("--verify", cfg.verify, "run the brute-force verification suite");
  app.add_option("--output,-o", cfg.output, "output path (default: stdout)");
  app.add_flag("--split-any-rank", cfg.split_any_rank,
               "allow so-split at ranks other than 6");
  app.add_option("--seed", cfg.seed, "RNG seed for the verification oracle");
  bool parallel = false;
  app.add_flag("--parallel", parallel, "use the OpenMP kernels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.algebra = algebra == "so-star" ? AlgebraTag::so_star : AlgebraTag::so_split;
  if (cfg.rank < 4 || cfg.rank % 2 != 0)
    throw UsageError("rank must be an even integer >= 4");
  if (cfg.algebra == AlgebraTag::so_split && cfg.rank != 6 && !cfg.split_any_rank)
    throw UsageError("so-split is stated at rank 6; pass --split-any-rank to override");
  cfg.labels = parse_labels(labels, cfg.rank);
  cfg.reduced_only = edges == "reduced";
  cfg.format = format == "json"  ? OutputFormat::json
               : format == "dot" ? OutputFormat::dot
                                 : OutputFormat::table;
  cfg.exec = parallel ? ExecMode::parallel : ExecMode::serial;
  return cfg;
}

}  // namespace ermult
