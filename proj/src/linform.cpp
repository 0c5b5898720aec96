#include "ermult/linform.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ermult {

namespace {

void check_same_arity(const LinForm& a, const LinForm& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("linear form arity mismatch: " +
                                std::to_string(a.arity()) + " vs " +
                                std::to_string(b.arity()));
}

}  // namespace

LinForm LinForm::constant(std::size_t arity, Rational c) {
  LinForm f(arity);
  f.constant_ = std::move(c);
  return f;
}

LinForm LinForm::indeterminate(std::size_t arity, std::size_t index) {
  if (index < 1 || index > arity)
    throw std::invalid_argument("indeterminate index out of range");
  LinForm f(arity);
  f.coeffs_[index - 1] = 1;
  return f;
}

const Rational& LinForm::coeff(std::size_t index) const {
  if (index < 1 || index > coeffs_.size())
    throw std::invalid_argument("coefficient index out of range");
  return coeffs_[index - 1];
}

Rational& LinForm::mutable_coeff(std::size_t index) {
  if (index < 1 || index > coeffs_.size())
    throw std::invalid_argument("coefficient index out of range");
  return coeffs_[index - 1];
}

bool LinForm::is_zero() const {
  if (constant_ != 0) return false;
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

LinForm& LinForm::operator+=(const LinForm& o) {
  check_same_arity(*this, o);
  constant_ += o.constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  check_same_arity(*this, o);
  constant_ -= o.constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

LinForm LinForm::operator-() const {
  LinForm f(*this);
  f.constant_ = -f.constant_;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

LinForm LinForm::scaled(const Rational& r) const {
  LinForm f(*this);
  f.constant_ *= r;
  for (auto& c : f.coeffs_) c *= r;
  return f;
}

bool LinForm::operator<(const LinForm& o) const {
  if (constant_ != o.constant_) return constant_ < o.constant_;
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  return false;
}

Rational LinForm::eval_at(const std::vector<long>& labels) const {
  if (labels.size() != coeffs_.size())
    throw std::invalid_argument("label vector length does not match arity");
  Rational v = constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) v += coeffs_[i] * labels[i];
  return v;
}

namespace {

// Positive content of the nonzero entries: gcd of numerators over lcm of
// denominators.  Dividing by it leaves coprime integer entries.
Rational content(const std::vector<Rational>& entries) {
  BigInt num = 0, den = 1;
  for (const auto& e : entries) {
    if (e == 0) continue;
    num = gcd(num, BigInt(abs(numerator(e))));
    den = lcm(den, denominator(e));
  }
  return num == 0 ? Rational(1) : Rational(num, den);
}

std::string term(const Rational& coeff_abs, std::size_t index) {
  std::string t;
  if (coeff_abs != 1) t = to_string(coeff_abs) + "*";
  return t + "m" + std::to_string(index);
}

// f must have its first nonzero entry positive; renders interior signs.
std::string plain(const LinForm& f) {
  std::string out;
  for (std::size_t i = 1; i <= f.arity(); ++i) {
    const Rational& c = f.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += (c < 0) ? "-" : "+";
    out += term(abs(c), i);
  }
  const Rational& k = f.constant_term();
  if (k != 0) {
    if (!out.empty()) out += (k < 0) ? "-" : "+";
    out += to_string(abs(k));
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string LinForm::text() const {
  std::vector<Rational> entries(coeffs_);
  entries.push_back(constant_);

  std::size_t nonzero = 0;
  for (const auto& e : entries)
    if (e != 0) ++nonzero;
  if (nonzero == 0) return "0";

  if (nonzero == 1) {
    for (std::size_t i = 1; i <= arity(); ++i) {
      const Rational& c = coeffs_[i - 1];
      if (c == 0) continue;
      std::string sign = c < 0 ? "-" : "";
      return sign + term(abs(c), i);
    }
    return to_string(constant_);
  }

  // Render order is m_1..m_k then the constant; the sign of the first
  // nonzero coefficient becomes the single leading sign.
  Rational lead;
  for (const auto& c : coeffs_)
    if (c != 0) {
      lead = c;
      break;
    }
  if (lead == 0) lead = constant_;

  Rational factor = content(entries);
  if (lead < 0) factor = -factor;
  if (factor == 1) return plain(*this);

  LinForm inner = scaled(Rational(1) / factor);
  std::string prefix = factor == -1 ? "-" : to_string(factor) + "*";
  return prefix + "(" + plain(inner) + ")";
}

Cmp cmp_generic(const LinForm& a, const LinForm& b) {
  check_same_arity(a, b);
  LinForm d = a - b;
  bool any_pos = false, any_neg = false;
  auto scan = [&](const Rational& v) {
    if (v > 0) any_pos = true;
    if (v < 0) any_neg = true;
  };
  scan(d.constant_term());
  for (std::size_t i = 1; i <= d.arity(); ++i) scan(d.coeff(i));
  if (!any_pos && !any_neg) return Cmp::Equal;
  if (any_pos && any_neg) return Cmp::Incomparable;
  return any_pos ? Cmp::Greater : Cmp::Less;
}

bool is_positive_integer_valued(const LinForm& f) {
  if (f.is_zero()) return false;
  if (!is_integer(f.constant_term()) || f.constant_term() < 0) return false;
  for (std::size_t i = 1; i <= f.arity(); ++i) {
    const Rational& c = f.coeff(i);
    if (!is_integer(c) || c < 0) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const LinForm& f) {
  return os << f.text();
}

}  // namespace ermult
