#pragma once

#include "ermult/linform.hpp"

#include <array>
#include <string>
#include <vector>

namespace ermult {

// Hand-checked rank-6 signature table, stored pairwise: the minus row is
// (labels; -1/2 * c_weights . m) and the plus partner carries the reversed
// labels with the opposite c.  label_parts[i] lists the m-indices summed in
// the i-th label, e.g. {4,6} for m_4+m_6.
struct ReferenceRow {
  std::string base_name;                        // "chi_0", "chi_c'", ...
  std::array<std::vector<int>, 5> label_parts;  // five su*(6) labels
  std::array<int, 6> c_weights;                 // c^- = -1/2 * sum_i c_weights[i]*m_i
};

const std::vector<ReferenceRow>& reference_rows_rank6();

// One fully expanded signature (arity-6 symbolic forms).
struct ReferenceSignature {
  std::string name;  // base name with "-" or "+" suffix
  std::vector<LinForm> labels;
  LinForm c;
};

// All 32 expanded signatures of the rank-6 table.
std::vector<ReferenceSignature> reference_signatures_rank6();

}  // namespace ermult
