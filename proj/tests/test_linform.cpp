#include "ermult/linform.hpp"

#include <doctest.h>

#include <random>

using namespace ermult;

namespace {

LinForm m(int i) { return LinForm::indeterminate(6, i); }

// -1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6), the c form of the dominant vertex.
LinForm dominant_c() {
  LinForm f(6);
  const int w[6] = {1, 2, 3, 4, 2, 3};
  for (int i = 1; i <= 6; ++i) f.mutable_coeff(i) = Rational(-w[i - 1], 2);
  return f;
}

LinForm random_form(std::mt19937& rng, std::size_t arity) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  LinForm f(arity);
  f.set_constant(Rational(num(rng), den(rng)));
  for (std::size_t i = 1; i <= arity; ++i)
    f.mutable_coeff(i) = Rational(num(rng), den(rng));
  return f;
}

std::vector<long> random_labels(std::mt19937& rng, std::size_t arity, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<long> v(arity);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(4, 8)) == "1/2");
  CHECK(to_string(Rational(-15, 2)) == "-15/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(parse_rational("-15/2") == Rational(-15, 2));
  CHECK(parse_rational("42") == 42);
  CHECK(is_integer(Rational(6, 3)));
  CHECK(!is_integer(Rational(1, 2)));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("linear form arithmetic") {
  LinForm s = m(1) + m(2);
  CHECK(s.coeff(1) == 1);
  CHECK(s.coeff(2) == 1);
  CHECK(s.coeff(3) == 0);

  // (m5+m6)/2 - (m5-m6)/2 = m6
  const Rational half(1, 2);
  LinForm cancel = (m(5) + m(6)).scaled(half) - (m(5) - m(6)).scaled(half);
  CHECK(cancel == m(6));

  CHECK(-dominant_c() == dominant_c().scaled(-1));
  CHECK((-dominant_c()).coeff(4) == 2);

  LinForm other(4);
  CHECK_THROWS_AS(m(1) + other, std::invalid_argument);
}

TEST_CASE("evaluation") {
  const std::vector<long> ones(6, 1);
  CHECK((m(4) + m(6)).eval_at(ones) == 2);
  CHECK(dominant_c().eval_at(ones) == Rational(-15, 2));
  CHECK(LinForm(6).eval_at(ones) == 0);
  CHECK_THROWS_AS(m(1).eval_at({1, 2}), std::invalid_argument);

  // eval is additive.
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    LinForm a = random_form(rng, 6), b = random_form(rng, 6);
    auto v = random_labels(rng, 6, 1, 20);
    CHECK((a + b).eval_at(v) == a.eval_at(v) + b.eval_at(v));
  }
}

TEST_CASE("generic comparison") {
  CHECK(cmp_generic(m(1) + m(2), m(2)) == Cmp::Greater);
  CHECK(cmp_generic(m(6), m(5)) == Cmp::Incomparable);
  const Rational half(1, 2);
  CHECK(cmp_generic((m(5) + m(6)).scaled(half), (m(6) - m(5)).scaled(half)) == Cmp::Greater);
  CHECK(cmp_generic(m(3), m(3)) == Cmp::Equal);

  std::mt19937 rng(11);
  int decided = 0;
  for (int t = 0; t < 400; ++t) {
    LinForm a = random_form(rng, 6), b = random_form(rng, 6);
    const Cmp ab = cmp_generic(a, b), ba = cmp_generic(b, a);
    // Antisymmetry and consistency with structural equality.
    if (ab == Cmp::Greater) CHECK(ba == Cmp::Less);
    if (ab == Cmp::Less) CHECK(ba == Cmp::Greater);
    if (ab == Cmp::Equal) {
      CHECK(ba == Cmp::Equal);
      CHECK(a == b);
    }
    if (ab == Cmp::Incomparable) CHECK(ba == Cmp::Incomparable);
    // Greater really does mean greater at every admissible label vector.
    if (ab == Cmp::Greater) {
      ++decided;
      for (int k = 0; k < 100; ++k) {
        auto v = random_labels(rng, 6, 1, 20);
        CHECK(a.eval_at(v) > b.eval_at(v));
      }
    }
  }
  CHECK(decided > 0);
}

TEST_CASE("positive-integer-valued forms") {
  CHECK(is_positive_integer_valued(m(6)));
  CHECK(!is_positive_integer_valued((m(6) - m(5)).scaled(Rational(1, 2))));
  CHECK(is_positive_integer_valued(m(1) + m(3) + m(6)));
  CHECK(!is_positive_integer_valued(LinForm(6)));
  CHECK(!is_positive_integer_valued(-m(2)));
  CHECK(!is_positive_integer_valued(m(1).scaled(Rational(1, 2))));
  // Numeric mode: positive integer constants qualify, others do not.
  CHECK(is_positive_integer_valued(LinForm::constant(6, 5)));
  CHECK(!is_positive_integer_valued(LinForm::constant(6, Rational(1, 2))));
  CHECK(!is_positive_integer_valued(LinForm::constant(6, -1)));

  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    LinForm f = random_form(rng, 6);
    if (!is_positive_integer_valued(f)) continue;
    for (int k = 0; k < 20; ++k) {
      const Rational v = f.eval_at(random_labels(rng, 6, 1, 20));
      CHECK(is_integer(v));
      CHECK(v >= 1);
    }
  }
}

TEST_CASE("canonical text rendering") {
  CHECK(LinForm(6).text() == "0");
  CHECK(m(6).text() == "m6");
  CHECK((-m(3)).text() == "-m3");
  CHECK(m(3).scaled(2).text() == "2*m3");
  CHECK((m(4) + m(6)).text() == "m4+m6");
  CHECK(LinForm::constant(6, Rational(-15, 2)).text() == "-15/2");
  CHECK((-dominant_c()).scaled(2).text() == "m1+2*m2+3*m3+4*m4+2*m5+3*m6");
  CHECK(dominant_c().text() == "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)");
  CHECK((-(m(1) + m(2))).text() == "-(m1+m2)");
  // Constant term renders last inside the factored parenthesis.
  LinForm d = -dominant_c() + LinForm::constant(6, Rational(15, 2));
  CHECK(d.text() == "1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6+15)");
  // Leading sign comes from the first nonzero coefficient.
  LinForm g(6);
  g.mutable_coeff(1) = Rational(1, 2);
  g.mutable_coeff(3) = Rational(-1, 2);
  g.mutable_coeff(6) = Rational(-1, 2);
  CHECK(g.text() == "1/2*(m1-m3-m6)");
}
