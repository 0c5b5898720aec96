#pragma once

#include "ermult/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace ermult {

enum class Cmp { Less, Greater, Equal, Incomparable };

// Linear form  constant + sum_i coeff(i)*m_i  in the label indeterminates
// m_1..m_k, with exact rational coefficients.  The arity k is fixed per run
// (k = rank); mixing arities is a usage error.  In numeric runs forms carry
// the same arity with all coefficients zero.
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(std::size_t arity) : coeffs_(arity) {}

  static LinForm constant(std::size_t arity, Rational c);
  // The form m_index (index is 1-based).
  static LinForm indeterminate(std::size_t arity, std::size_t index);

  std::size_t arity() const { return coeffs_.size(); }
  const Rational& constant_term() const { return constant_; }
  // 1-based coefficient of m_index.
  const Rational& coeff(std::size_t index) const;
  Rational& mutable_coeff(std::size_t index);
  void set_constant(Rational c) { constant_ = std::move(c); }

  bool is_zero() const;

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  LinForm operator-() const;
  LinForm scaled(const Rational& r) const;

  bool operator==(const LinForm& o) const {
    return constant_ == o.constant_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LinForm& o) const { return !(*this == o); }
  // Lexicographic on (constant, coeffs); gives deterministic container order.
  bool operator<(const LinForm& o) const;

  // Exact substitution m_i := labels[i-1].
  Rational eval_at(const std::vector<long>& labels) const;

  // Canonical rendering: variable terms in index order, constant last,
  // the content factored out so there is a single leading sign, e.g.
  //   "m1+2*m2+3*m3+4*m4+2*m5+3*m6"
  //   "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)"
  //   "m4+m6", "2*m3", "-15/2", "0"
  std::string text() const;

 private:
  Rational constant_;
  std::vector<Rational> coeffs_;
};

// Coefficient-dominance order: Greater iff a-b has every entry (constant and
// coefficients) >= 0 with at least one > 0, so a > b at every admissible
// label assignment (all m_i >= 1).  Sound but deliberately incomplete:
// mixed-sign differences are Incomparable.
Cmp cmp_generic(const LinForm& a, const LinForm& b);

// True iff f is guaranteed to evaluate in {1,2,3,...} for every label vector
// with all m_i >= 1: integer entries, all nonnegative, not all zero.
bool is_positive_integer_valued(const LinForm& f);

std::ostream& operator<<(std::ostream& os, const LinForm& f);

}  // namespace ermult
