#include "ermult/reference_table.hpp"

namespace ermult {

const std::vector<ReferenceRow>& reference_rows_rank6() {
  // Range shorthands expanded: a run of indices means the consecutive sum
  // (m_{35} = m3+m4+m5) and a comma splices a gap (m_{4,6} = m4+m6,
  // m_{24,6} = m2+m3+m4+m6).
  static const std::vector<ReferenceRow> rows = {
      {"chi_0", {{{1}, {2}, {3}, {4}, {5}}}, {1, 2, 3, 4, 2, 3}},
      {"chi_a", {{{1}, {2}, {3}, {4, 6}, {5}}}, {1, 2, 3, 4, 2, 1}},
      {"chi_b", {{{1}, {2}, {3, 4}, {6}, {4, 5}}}, {1, 2, 3, 2, 2, 1}},
      {"chi_c", {{{1}, {2}, {3, 4, 5}, {6}, {4}}}, {1, 2, 3, 2, 0, 1}},
      {"chi_c'", {{{1}, {2, 3}, {4}, {6}, {3, 4, 5}}}, {1, 2, 1, 2, 2, 1}},
      {"chi_d", {{{1}, {2, 3}, {4, 5}, {6}, {3, 4}}}, {1, 2, 1, 2, 0, 1}},
      {"chi_d'", {{{1, 2}, {3}, {4}, {6}, {2, 3, 4, 5}}}, {1, 0, 1, 2, 2, 1}},
      {"chi_e", {{{1}, {2, 3, 4}, {5}, {4, 6}, {3}}}, {1, 2, 1, 0, 0, 1}},
      {"chi_e'", {{{1, 2}, {3}, {4, 5}, {6}, {2, 3, 4}}}, {1, 0, 1, 2, 0, 1}},
      {"chi_e''", {{{2}, {3}, {4}, {6}, {1, 2, 3, 4, 5}}}, {-1, 0, 1, 2, 2, 1}},
      {"chi_f", {{{1, 2}, {3, 4}, {5}, {4, 6}, {2, 3}}}, {1, 0, 1, 0, 0, 1}},
      {"chi_f'", {{{2}, {3}, {4, 5}, {6}, {1, 2, 3, 4}}}, {-1, 0, 1, 2, 0, 1}},
      {"chi_f''", {{{1}, {2, 3, 4, 6}, {5}, {4}, {3}}}, {1, 2, 1, 0, 0, -1}},
      {"chi_g", {{{1, 2, 3}, {4}, {5}, {3, 4, 6}, {2}}}, {1, 0, -1, 0, 0, 1}},
      {"chi_g'", {{{1, 2}, {3, 4, 6}, {5}, {4}, {2, 3}}}, {1, 0, 1, 0, 0, -1}},
      {"chi_g''", {{{2}, {3, 4}, {5}, {4, 6}, {1, 2, 3}}}, {-1, 0, 1, 0, 0, 1}},
  };
  return rows;
}

namespace {

LinForm sum_of(const std::vector<int>& indices) {
  LinForm f(6);
  for (int i : indices) f += LinForm::indeterminate(6, i);
  return f;
}

}  // namespace

std::vector<ReferenceSignature> reference_signatures_rank6() {
  std::vector<ReferenceSignature> out;
  for (const auto& row : reference_rows_rank6()) {
    LinForm half_c(6);
    for (int i = 1; i <= 6; ++i)
      half_c.mutable_coeff(i) = Rational(row.c_weights[i - 1], 2);

    ReferenceSignature minus;
    minus.name = row.base_name + "-";
    for (const auto& part : row.label_parts) minus.labels.push_back(sum_of(part));
    minus.c = -half_c;

    ReferenceSignature plus;
    plus.name = row.base_name + "+";
    plus.labels.assign(minus.labels.rbegin(), minus.labels.rend());
    plus.c = half_c;

    out.push_back(std::move(minus));
    out.push_back(std::move(plus));
  }
  return out;
}

}  // namespace ermult
