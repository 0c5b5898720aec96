#pragma once

#include "ermult/reference_table.hpp"
#include "ermult/serialize.hpp"

#include <string>
#include <vector>

namespace ermult {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
  std::string render() const;
};

// Cross-checks the construction against the brute-force oracles: full group
// order and even-flip invariant, orbit-quotient class count against the
// coset representatives, the rank-6 signature table, the Knapp-Stein
// involution, arrow-label simplicity on the reduced edge set, and the DAG
// shape (unique source/sink, connected, acyclic).  Requires rank <= 6
// (std::invalid_argument beyond the oracle bound).
VerifyReport run_verify(const RunConfig& cfg);

// Row-level diff of a multiplet's signatures against an expanded reference
// table; empty string when they match exactly.
std::string diff_signatures(const Multiplet& m,
                            const std::vector<ReferenceSignature>& expected);

}  // namespace ermult
