#include "ermult/weylcoset.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ermult {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm w;
  w.perm.resize(n);
  for (int i = 0; i < n; ++i) w.perm[i] = i;
  w.signs.assign(n, 1);
  return w;
}

SignedPerm SignedPerm::reflection(const Root& a, int n) {
  SignedPerm w = identity(n);
  std::swap(w.perm[a.i - 1], w.perm[a.j - 1]);
  if (a.kind == RootKind::Sum) {
    w.signs[a.i - 1] = -1;
    w.signs[a.j - 1] = -1;
  }
  return w;
}

int SignedPerm::flip_count() const {
  int c = 0;
  for (int s : signs) c += (s < 0);
  return c;
}

SignedPerm SignedPerm::compose(const SignedPerm& b) const {
  const int n = degree();
  if (b.degree() != n) throw std::invalid_argument("degree mismatch in composition");
  SignedPerm w;
  w.perm.resize(n);
  w.signs.resize(n);
  for (int i = 0; i < n; ++i) {
    w.perm[i] = b.perm[perm[i]];
    w.signs[i] = signs[i] * b.signs[perm[i]];
  }
  return w;
}

SignedPerm SignedPerm::inverse() const {
  const int n = degree();
  SignedPerm w;
  w.perm.resize(n);
  w.signs.resize(n);
  for (int i = 0; i < n; ++i) {
    w.perm[perm[i]] = i;
    w.signs[perm[i]] = signs[i];
  }
  return w;
}

WeightVec act(const SignedPerm& w, const WeightVec& x) {
  const int n = w.degree();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("weight size does not match group degree");
  WeightVec y;
  y.coords.reserve(n);
  for (int i = 0; i < n; ++i) {
    LinForm c = x.coords[w.perm[i]];
    y.coords.push_back(w.signs[i] < 0 ? -c : c);
  }
  return y;
}

std::string CosetRep::flip_name() const {
  std::string s = "F{";
  for (std::size_t i = 0; i < flip_set.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(flip_set[i]);
  }
  return s + "}";
}

std::vector<CosetRep> coset_reps(int rank) {
  if (rank < 4 || rank % 2 != 0)
    throw std::invalid_argument("unsupported rank " + std::to_string(rank));
  std::vector<CosetRep> reps;
  reps.reserve(std::size_t(1) << (rank - 1));
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    CosetRep rep;
    for (int i = 1; i <= rank; ++i)
      if (mask & (1u << (i - 1))) rep.flip_set.push_back(i);

    // Position order of the M-dominant image: unflipped coordinates
    // ascending (largest values first), the +-x_n slot, then flipped
    // coordinates with descending index.  |x_n| < x_j for j < n keeps the
    // slot between the positive and negative blocks.
    std::vector<std::pair<int, int>> placement;  // (source index 0-based, sign)
    for (int i = 1; i <= rank; ++i)
      if (!(mask & (1u << (i - 1)))) placement.emplace_back(i - 1, 1);
    if (mask & (1u << (rank - 1))) placement.emplace_back(rank - 1, -1);
    for (int i = rank - 1; i >= 1; --i)
      if (mask & (1u << (i - 1))) placement.emplace_back(i - 1, -1);

    SignedPerm w;
    for (auto [src, sign] : placement) {
      w.perm.push_back(src);
      w.signs.push_back(sign);
    }
    rep.element = std::move(w);
    reps.push_back(std::move(rep));
  }
  return reps;
}

namespace {

constexpr int kOracleMaxRank = 6;  // |W(D_6)| = 23040; beyond that the oracle is off

void check_oracle_rank(int rank) {
  if (rank > kOracleMaxRank)
    throw std::invalid_argument("brute-force oracle unavailable for rank > " +
                                std::to_string(kOracleMaxRank));
  if (rank < 4 || rank % 2 != 0)
    throw std::invalid_argument("unsupported rank " + std::to_string(rank));
}

std::vector<SignedPerm> generators(int rank) {
  std::vector<SignedPerm> gens;
  for (int i = 1; i < rank; ++i)
    gens.push_back(SignedPerm::reflection({RootKind::Diff, i, i + 1}, rank));
  gens.push_back(SignedPerm::reflection({RootKind::Sum, rank - 1, rank}, rank));
  return gens;
}

std::vector<SignedPerm> closure_serial(int rank) {
  const auto gens = generators(rank);
  std::vector<SignedPerm> sorted{SignedPerm::identity(rank)};
  std::vector<SignedPerm> frontier = sorted;
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) next.push_back(w.compose(g));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<SignedPerm> fresh;
    for (auto& w : next)
      if (!std::binary_search(sorted.begin(), sorted.end(), w))
        fresh.push_back(std::move(w));
    std::vector<SignedPerm> merged;
    merged.reserve(sorted.size() + fresh.size());
    std::merge(sorted.begin(), sorted.end(), fresh.begin(), fresh.end(),
               std::back_inserter(merged));
    sorted = std::move(merged);
    frontier = std::move(fresh);
  }
  return sorted;
}

std::vector<SignedPerm> closure_parallel(int rank) {
#ifndef _OPENMP
  return closure_serial(rank);
#else
  const auto gens = generators(rank);
  std::vector<SignedPerm> sorted{SignedPerm::identity(rank)};
  std::vector<SignedPerm> frontier = sorted;
  while (!frontier.empty()) {
    const std::size_t fn = frontier.size();
    std::vector<SignedPerm> next(fn * gens.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < fn; ++i)
      for (std::size_t g = 0; g < gens.size(); ++g)
        next[i * gens.size() + g] = frontier[i].compose(gens[g]);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<SignedPerm> fresh;
    for (auto& w : next)
      if (!std::binary_search(sorted.begin(), sorted.end(), w))
        fresh.push_back(std::move(w));
    std::vector<SignedPerm> merged;
    merged.reserve(sorted.size() + fresh.size());
    std::merge(sorted.begin(), sorted.end(), fresh.begin(), fresh.end(),
               std::back_inserter(merged));
    sorted = std::move(merged);
    frontier = std::move(fresh);
  }
  return sorted;
#endif
}

}  // namespace

std::vector<SignedPerm> brute_force_group(int rank, ExecMode mode) {
  check_oracle_rank(rank);
  return mode == ExecMode::parallel ? closure_parallel(rank) : closure_serial(rank);
}

std::vector<std::vector<Rational>> orbit_classes(const std::vector<SignedPerm>& group,
                                                 const std::vector<Rational>& x,
                                                 ExecMode mode) {
  const std::size_t gn = group.size();
  std::vector<std::vector<Rational>> images(gn);
  auto image_of = [&](const SignedPerm& w) {
    std::vector<Rational> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      y[i] = w.signs[i] < 0 ? Rational(-x[w.perm[i]]) : x[w.perm[i]];
    std::sort(y.begin(), y.end(), std::greater<Rational>());
    return y;
  };
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < gn; ++i) images[i] = image_of(group[i]);
  } else {
    for (std::size_t i = 0; i < gn; ++i) images[i] = image_of(group[i]);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace ermult
