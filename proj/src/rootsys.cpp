#include "ermult/rootsys.hpp"

#include <stdexcept>

namespace ermult {

std::string to_string(const Root& r) {
  const char* mid = r.kind == RootKind::Sum ? "+" : "-";
  return "e" + std::to_string(r.i) + mid + "e" + std::to_string(r.j);
}

LinForm WeightVec::sum() const {
  if (coords.empty()) throw std::invalid_argument("empty weight");
  LinForm s(coords.front().arity());
  for (const auto& c : coords) s += c;
  return s;
}

RootSystemD RootSystemD::build(int rank) {
  if (rank < 4 || rank % 2 != 0)
    throw std::invalid_argument("unsupported rank " + std::to_string(rank) +
                                ": need an even rank >= 4");
  RootSystemD rs;
  rs.rank_ = rank;
  for (int i = 1; i < rank; ++i)
    for (int j = i + 1; j <= rank; ++j) {
      rs.positive_.push_back({RootKind::Diff, i, j});
      rs.positive_.push_back({RootKind::Sum, i, j});
    }
  for (int i = 1; i < rank; ++i) rs.simple_.push_back({RootKind::Diff, i, i + 1});
  rs.simple_.push_back({RootKind::Sum, rank - 1, rank});

  rs.rho_.coords.reserve(rank);
  for (int i = 0; i < rank; ++i)
    rs.rho_.coords.push_back(LinForm::constant(rank, Rational(rank - 1 - i)));
  return rs;
}

LinForm RootSystemD::inner(const WeightVec& x, const Root& a) const {
  if (static_cast<int>(x.size()) != rank_)
    throw std::invalid_argument("weight size does not match rank");
  LinForm v = x.coord(a.i);
  if (a.kind == RootKind::Sum)
    v += x.coord(a.j);
  else
    v -= x.coord(a.j);
  return v;
}

WeightVec RootSystemD::reflect(const WeightVec& x, const Root& a) const {
  const LinForm p = pairing(x, a);
  WeightVec y = x;
  y.coords[a.i - 1] -= p;
  if (a.kind == RootKind::Sum)
    y.coords[a.j - 1] -= p;
  else
    y.coords[a.j - 1] += p;
  return y;
}

WeightVec RootSystemD::lambda_plus_rho_symbolic() const {
  std::vector<LinForm> ms;
  for (int i = 1; i <= rank_; ++i)
    ms.push_back(LinForm::indeterminate(rank_, i));
  const Rational half(1, 2);

  WeightVec x;
  x.coords.assign(rank_, LinForm(rank_));
  // x_n = (m_n - m_{n-1})/2, x_{n-1} = (m_{n-1} + m_n)/2, then
  // x_i = m_i + x_{i+1} upward.
  x.coords[rank_ - 1] = (ms[rank_ - 1] - ms[rank_ - 2]).scaled(half);
  x.coords[rank_ - 2] = (ms[rank_ - 2] + ms[rank_ - 1]).scaled(half);
  for (int i = rank_ - 3; i >= 0; --i) x.coords[i] = ms[i] + x.coords[i + 1];

  for (const auto& a : positive_)
    if (pairing(x, a).is_zero())
      throw std::logic_error("dominant seed is not regular");
  return x;
}

WeightVec RootSystemD::lambda_plus_rho(const std::vector<long>& labels) const {
  if (static_cast<int>(labels.size()) != rank_)
    throw std::invalid_argument("need exactly " + std::to_string(rank_) + " labels");
  for (long v : labels)
    if (v < 1)
      throw std::invalid_argument(
          "labels must be positive integers (degenerate limits are not supported)");
  const WeightVec sym = lambda_plus_rho_symbolic();
  WeightVec x;
  x.coords.reserve(rank_);
  for (const auto& c : sym.coords)
    x.coords.push_back(LinForm::constant(rank_, c.eval_at(labels)));
  return x;
}

}  // namespace ermult
