#pragma once

#include "ermult/exec.hpp"
#include "ermult/rootsys.hpp"

#include <string>
#include <vector>

namespace ermult {

// Element of W(D_n): a permutation with an even number of sign changes.
// Acts on weights by (w.x)_i = signs[i] * x_{perm[i]} (0-based internally).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> signs;  // +1 / -1, product +1

  static SignedPerm identity(int n);
  // The reflection in a D_n root as a group element.
  static SignedPerm reflection(const Root& a, int n);

  int degree() const { return static_cast<int>(perm.size()); }
  int flip_count() const;

  // (a*b) acts as: first b, then a.
  SignedPerm compose(const SignedPerm& b) const;
  SignedPerm inverse() const;

  bool operator==(const SignedPerm& o) const {
    return perm == o.perm && signs == o.signs;
  }
  bool operator<(const SignedPerm& o) const {
    return perm != o.perm ? perm < o.perm : signs < o.signs;
  }
};

WeightVec act(const SignedPerm& w, const WeightVec& x);

// Minimal representative of a coset in W(D_n) modulo the compact W(A_{n-1}):
// classes are indexed by the even-cardinality subsets of {1..n} whose
// eps-coordinates get negated; the element maps the dominant weight straight
// to its M-dominant sorted image.
struct CosetRep {
  SignedPerm element;
  std::vector<int> flip_set;  // 1-based indices, ascending, |flip_set| even

  std::string flip_name() const;  // "F{5,6}", "F{}" for the identity coset
};

// All 2^{n-1} representatives, in ascending flip-set bitmask order.
// Requires n even, >= 4.
std::vector<CosetRep> coset_reps(int rank);

// Brute-force closure of the simple reflections: the full Weyl group as a
// sorted vector of 2^{n-1} * n! elements.  Test oracle only; n <= 6.
std::vector<SignedPerm> brute_force_group(int rank, ExecMode mode = ExecMode::serial);

// Orbit of a numeric weight under a group, canonicalized by descending
// coordinate sort, deduplicated and sorted.  The quotient oracle: its size
// must equal the number of coset representatives.
std::vector<std::vector<Rational>> orbit_classes(const std::vector<SignedPerm>& group,
                                                 const std::vector<Rational>& x,
                                                 ExecMode mode = ExecMode::serial);

}  // namespace ermult
