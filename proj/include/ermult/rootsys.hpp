#pragma once

#include "ermult/linform.hpp"

#include <string>
#include <vector>

namespace ermult {

enum class RootKind { Diff, Sum };  // eps_i - eps_j (compact) / eps_i + eps_j (noncompact)

struct Root {
  RootKind kind;
  int i = 0, j = 0;  // 1-based, i < j
  bool compact() const { return kind == RootKind::Diff; }
  bool operator==(const Root& o) const {
    return kind == o.kind && i == o.i && j == o.j;
  }
};

std::string to_string(const Root& r);

// n-tuple of linear forms: the eps-basis coordinates of a weight (Lambda+rho
// and its Weyl images).
struct WeightVec {
  std::vector<LinForm> coords;  // coords[0] is the eps_1 coordinate

  std::size_t size() const { return coords.size(); }
  const LinForm& coord(std::size_t i) const { return coords.at(i - 1); }  // 1-based
  LinForm sum() const;

  bool operator==(const WeightVec& o) const { return coords == o.coords; }
  bool operator!=(const WeightVec& o) const { return !(*this == o); }
  bool operator<(const WeightVec& o) const { return coords < o.coords; }
};

// Nilradical dimension of the j-th maximal parabolic of so*(2n),
// j = 1..n/2 (factors so*(2n-4j) + su*(2j)).  Only the j = n/2 case backs a
// construction here; at that j the value equals the noncompact root count
// n(n-1)/2.
constexpr long parabolic_nilradical_dim(int n, int j) {
  return static_cast<long>(j) * (4 * n - 6 * j - 1);
}

// The D_n root data in the orthonormal eps-basis: n(n-1) positive roots split
// evenly into compact differences and noncompact sums, simple roots
// a_i = eps_i - eps_{i+1} (i < n) and a_n = eps_{n-1} + eps_n, and the Weyl
// vector rho = (n-1, n-2, ..., 1, 0).  Immutable after build.
class RootSystemD {
 public:
  // Requires n even and >= 4; label arity is n.
  static RootSystemD build(int rank);

  int rank() const { return rank_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  const WeightVec& rho() const { return rho_; }

  // (x, a) in the standard inner product.
  LinForm inner(const WeightVec& x, const Root& a) const;
  // <x, a^vee> = 2(x,a)/(a,a); equals inner because every D_n root has
  // squared length 2.
  LinForm pairing(const WeightVec& x, const Root& a) const { return inner(x, a); }

  // x - <x, a^vee> * a.  An involution; for sums it swaps and negates the
  // two coordinates, for differences it swaps them.
  WeightVec reflect(const WeightVec& x, const Root& a) const;

  // The unique weight with pairing(x, a_i) = m_i for every simple root,
  // in the symbolic indeterminates m_1..m_n.  Asserts regularity: no root
  // pairs to the zero form.
  WeightVec lambda_plus_rho_symbolic() const;
  // Numeric mode: the same weight with labels substituted (all >= 1).
  WeightVec lambda_plus_rho(const std::vector<long>& labels) const;

 private:
  int rank_ = 0;
  std::vector<Root> positive_;
  std::vector<Root> simple_;
  WeightVec rho_;
};

}  // namespace ermult
