#include "ermult/serialize.hpp"
#include "ermult/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int write_out(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::cout << bytes;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "ermult: cannot open " << path << " for writing\n";
    return 2;
  }
  os << bytes;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ermult;
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    std::cout
        << "ermult: exact multiplet diagrams of elementary representations\n\n"
           "usage: ermult [--algebra so-star|so-split] [--rank N]\n"
           "              [--labels symbolic|m1,m2,...] [--edges reduced|all]\n"
           "              [--format json|dot|table] [-o PATH]\n"
           "              [--verify] [--seed S] [--parallel] [--split-any-rank]\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "ermult: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.verify) {
      const VerifyReport rep = run_verify(cfg);
      const int rc = write_out(cfg.output, rep.render());
      return rc != 0 ? rc : (rep.all_pass() ? 0 : 1);
    }
    const Multiplet m = build_multiplet(cfg.rank, cfg.labels, cfg.algebra, cfg.exec);
    std::string bytes;
    switch (cfg.format) {
      case OutputFormat::json:
        bytes = emit_json(m, cfg.reduced_only);
        break;
      case OutputFormat::dot:
        bytes = emit_dot(m, cfg.reduced_only);
        break;
      case OutputFormat::table:
        bytes = emit_table(m);
        break;
    }
    return write_out(cfg.output, bytes);
  } catch (const std::invalid_argument& e) {
    std::cerr << "ermult: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ermult: internal error: " << e.what() << "\n";
    return 1;
  }
}
