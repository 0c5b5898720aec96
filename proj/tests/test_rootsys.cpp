#include "ermult/rootsys.hpp"

#include <doctest.h>

#include <array>
#include <set>

using namespace ermult;

namespace {

// Independent oracle: roots as integer eps-vectors.
std::array<int, 6> eps_vector(const Root& r) {
  std::array<int, 6> v{};
  v[r.i - 1] = 1;
  v[r.j - 1] = r.kind == RootKind::Sum ? 1 : -1;
  return v;
}

}  // namespace

TEST_CASE("root counts and split") {
  const auto rs6 = RootSystemD::build(6);
  CHECK(rs6.positive_roots().size() == 30);
  int compact = 0, noncompact = 0;
  for (const auto& a : rs6.positive_roots()) (a.compact() ? compact : noncompact)++;
  CHECK(compact == 15);
  CHECK(noncompact == 15);

  const auto rs4 = RootSystemD::build(4);
  CHECK(rs4.positive_roots().size() == 12);

  CHECK_THROWS_AS(RootSystemD::build(5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemD::build(2), std::invalid_argument);
}

TEST_CASE("simple roots and rho") {
  const auto rs = RootSystemD::build(6);
  REQUIRE(rs.simple_roots().size() == 6);
  for (int i = 0; i < 5; ++i) {
    CHECK(rs.simple_roots()[i].kind == RootKind::Diff);
    CHECK(rs.simple_roots()[i].i == i + 1);
    CHECK(rs.simple_roots()[i].j == i + 2);
  }
  CHECK(rs.simple_roots()[5].kind == RootKind::Sum);
  CHECK(rs.simple_roots()[5].i == 5);
  CHECK(rs.simple_roots()[5].j == 6);
  // Only the last simple root is noncompact.
  int noncompact_simple = 0;
  for (const auto& a : rs.simple_roots()) noncompact_simple += !a.compact();
  CHECK(noncompact_simple == 1);

  // rho oracle: half the coordinate-wise sum of all positive roots.
  std::array<Rational, 6> half_sum{};
  for (const auto& a : rs.positive_roots()) {
    const auto v = eps_vector(a);
    for (int i = 0; i < 6; ++i) half_sum[i] += Rational(v[i], 2);
  }
  for (int i = 1; i <= 6; ++i) {
    CHECK(rs.rho().coord(i) == LinForm::constant(6, half_sum[i - 1]));
    CHECK(rs.rho().coord(i).constant_term() == 6 - i);
  }
  // Defining property: rho pairs to 1 with every simple root.
  for (const auto& a : rs.simple_roots())
    CHECK(rs.pairing(rs.rho(), a) == LinForm::constant(6, 1));
}

TEST_CASE("parabolic nilradical dimensions") {
  CHECK(parabolic_nilradical_dim(6, 1) == 17);
  CHECK(parabolic_nilradical_dim(6, 2) == 22);
  CHECK(parabolic_nilradical_dim(6, 3) == 15);
  // At j = n/2 the nilradical is spanned by the noncompact positive roots.
  for (int n : {4, 6, 8})
    CHECK(parabolic_nilradical_dim(n, n / 2) == n * (n - 1) / 2);
}

TEST_CASE("pairings pick out Dynkin labels") {
  const auto rs = RootSystemD::build(6);
  const WeightVec x = rs.lambda_plus_rho_symbolic();
  // pairing(Lambda+rho, a_i) = m_i for every simple root, exactly.
  for (int i = 0; i < 6; ++i)
    CHECK(rs.pairing(x, rs.simple_roots()[i]) == LinForm::indeterminate(6, i + 1));
  CHECK(rs.pairing(x, Root{RootKind::Diff, 5, 6}) == LinForm::indeterminate(6, 5));
  CHECK(rs.pairing(x, Root{RootKind::Sum, 5, 6}) == LinForm::indeterminate(6, 6));
}

TEST_CASE("lambda_plus_rho") {
  const auto rs = RootSystemD::build(6);
  const WeightVec x = rs.lambda_plus_rho_symbolic();

  // Sum of coordinates carries the weights (1,2,3,4,2,3).
  const LinForm s = x.sum();
  CHECK(s.text() == "m1+2*m2+3*m3+4*m4+2*m5+3*m6");
  CHECK(s.scaled(Rational(-1, 2)).text() == "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)");

  // Unit labels give exactly rho.
  const WeightVec ones = rs.lambda_plus_rho({1, 1, 1, 1, 1, 1});
  CHECK(ones == rs.rho());

  // Numeric preconditions.
  CHECK_THROWS_AS(rs.lambda_plus_rho({1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(rs.lambda_plus_rho({1, 1, 1, 1, 1, 0}), std::invalid_argument);

  // Rank 4 round trip.
  const auto rs4 = RootSystemD::build(4);
  const WeightVec x4 = rs4.lambda_plus_rho_symbolic();
  for (int i = 0; i < 4; ++i)
    CHECK(rs4.pairing(x4, rs4.simple_roots()[i]) == LinForm::indeterminate(4, i + 1));
}

TEST_CASE("reflections") {
  const auto rs = RootSystemD::build(6);
  const WeightVec x = rs.lambda_plus_rho_symbolic();

  // s_{e5+e6} swaps and negates the last two coordinates.
  const WeightVec y = rs.reflect(x, Root{RootKind::Sum, 5, 6});
  CHECK(y.coord(1) == x.coord(1));
  CHECK(y.coord(4) == x.coord(4));
  CHECK(y.coord(5) == -x.coord(6));
  CHECK(y.coord(6) == -x.coord(5));

  // reflect(x, b) = x - pairing(x,b)*b with pairing m6 here.
  const LinForm m6 = rs.pairing(x, Root{RootKind::Sum, 5, 6});
  CHECK(m6 == LinForm::indeterminate(6, 6));
  WeightVec manual = x;
  manual.coords[4] -= m6;
  manual.coords[5] -= m6;
  CHECK(y == manual);

  // Involution, for every positive root.
  for (const auto& a : rs.positive_roots()) CHECK(rs.reflect(rs.reflect(x, a), a) == x);

  // Every reflection permutes the root set (as integer eps-vectors, with
  // both signs included).
  std::set<std::array<int, 6>> all;
  for (const auto& a : rs.positive_roots()) {
    auto v = eps_vector(a);
    all.insert(v);
    for (auto& e : v) e = -e;
    all.insert(v);
  }
  CHECK(all.size() == 60);
  for (const auto& a : rs.positive_roots()) {
    const auto av = eps_vector(a);
    for (const auto& b : all) {
      // s_a(b) = b - (a,b)*a on integer vectors.
      int ip = 0;
      for (int i = 0; i < 6; ++i) ip += av[i] * b[i];
      std::array<int, 6> image = b;
      for (int i = 0; i < 6; ++i) image[i] -= ip * av[i];
      CHECK(all.count(image) == 1);
    }
  }
}
