#include "ermult/multiplet.hpp"

#include "ermult/reference_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ermult {

namespace {

bool generically_less(const LinForm& a, const LinForm& b) {
  switch (cmp_generic(a, b)) {
    case Cmp::Less:
      return true;
    case Cmp::Greater:
    case Cmp::Equal:
      return false;
    case Cmp::Incomparable:
      throw std::logic_error("incomparable coordinates in canonicalize: " + a.text() +
                             " vs " + b.text());
  }
  return false;
}

}  // namespace

WeightVec canonicalize(const WeightVec& x) {
  WeightVec y = x;
  auto& c = y.coords;
  // Insertion sort so every consumed comparison is an explicit
  // cmp_generic call; n is small.
  for (std::size_t i = 1; i < c.size(); ++i)
    for (std::size_t j = i; j > 0 && generically_less(c[j - 1], c[j]); --j)
      std::swap(c[j - 1], c[j]);
  return y;
}

Signature signature_of(const RootSystemD& rs, const WeightVec& y) {
  const int n = rs.rank();
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("weight size does not match rank");
  Signature sig;
  sig.labels.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    LinForm label = y.coord(i) - y.coord(i + 1);
    if (!is_positive_integer_valued(label))
      throw std::invalid_argument("non-dominant weight: label " + std::to_string(i) +
                                  " = " + label.text() +
                                  " is not positive-integer-valued");
    sig.labels.push_back(std::move(label));
  }
  sig.c = y.sum().scaled(Rational(-1, 2));
  if (n == 6) sig.d = conformal_weight_d(sig.c, n);
  return sig;
}

LinForm conformal_weight_d(const LinForm& c, int rank) {
  if (rank != 6)
    throw std::invalid_argument("conformal weight shift is only fixed at rank 6");
  return c + LinForm::constant(c.arity(), Rational(15, 2));
}

std::vector<BGGEdge> bgg_edges(const RootSystemD& rs, const std::vector<ERVertex>& vertices,
                               ExecMode mode) {
  std::map<WeightVec, int> vertex_of;
  for (const auto& v : vertices) vertex_of.emplace(v.weight, v.id);

  std::vector<Root> noncompact;
  for (const auto& a : rs.positive_roots())
    if (!a.compact()) noncompact.push_back(a);

  const std::size_t vn = vertices.size();
  std::vector<std::vector<BGGEdge>> per_vertex(vn);
  auto scan = [&](std::size_t vi) {
    const auto& v = vertices[vi];
    for (const auto& beta : noncompact) {
      LinForm m = rs.pairing(v.weight, beta);
      if (!is_positive_integer_valued(m)) continue;
      const WeightVec target = canonicalize(rs.reflect(v.weight, beta));
      auto it = vertex_of.find(target);
      if (it == vertex_of.end())
        throw std::logic_error("reflected weight not found among vertices");
      BGGEdge e;
      e.from = v.id;
      e.to = it->second;
      e.root = beta;
      // The arrow symbol i_{jk}: only when m is a bare indeterminate m_i.
      if (m.constant_term() == 0) {
        std::size_t hits = 0, which = 0;
        for (std::size_t k = 1; k <= m.arity(); ++k)
          if (m.coeff(k) != 0) {
            ++hits;
            which = k;
          }
        if (hits == 1 && m.coeff(which) == 1)
          e.label = std::to_string(which) + "_{" + std::to_string(beta.i) +
                    (beta.j > 9 ? "," : "") + std::to_string(beta.j) + "}";
      }
      e.m = std::move(m);
      per_vertex[vi].push_back(std::move(e));
    }
  };

  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t vi = 0; vi < vn; ++vi) scan(vi);
  } else {
    for (std::size_t vi = 0; vi < vn; ++vi) scan(vi);
  }

  std::vector<BGGEdge> edges;
  for (auto& bucket : per_vertex)
    for (auto& e : bucket) edges.push_back(std::move(e));
  return edges;
}

void transitive_reduction(std::vector<BGGEdge>& edges, int vertex_count) {
  const int n = vertex_count;
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (const auto& e : edges) {
    succ[e.from].push_back(e.to);
    ++indeg[e.to];
  }

  // Topological order (Kahn); a leftover node means a cycle.
  std::vector<int> order, stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::logic_error("cycle detected in BGG edge set");

  // reach[v] = nodes reachable from v through at least one edge.
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (int w : succ[v]) {
      reach[v][w / 64] |= (std::uint64_t(1) << (w % 64));
      for (int k = 0; k < words; ++k) reach[v][k] |= reach[w][k];
    }
  }

  for (auto& e : edges) {
    bool implied = false;
    for (int w : succ[e.from]) {
      if (w == e.to) continue;
      if (reach[w][e.to / 64] & (std::uint64_t(1) << (e.to % 64))) {
        implied = true;
        break;
      }
    }
    e.reduced = !implied;
  }
}

std::vector<std::pair<int, int>> ks_pairing(const std::vector<ERVertex>& vertices) {
  const std::size_t vn = vertices.size();
  std::map<std::vector<int>, int> by_flips;
  int n = 0;
  for (const auto& v : vertices) {
    by_flips.emplace(v.coset.flip_set, v.id);
    n = static_cast<int>(v.weight.size());
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> seen(vn, false);
  for (const auto& v : vertices) {
    if (seen[v.id]) continue;
    std::vector<int> complement;
    for (int i = 1; i <= n; ++i)
      if (!std::binary_search(v.coset.flip_set.begin(), v.coset.flip_set.end(), i))
        complement.push_back(i);
    auto it = by_flips.find(complement);
    if (it == by_flips.end() || it->second == v.id)
      throw std::logic_error("unpaired vertex in Knapp-Stein involution");
    const auto& w = vertices[it->second];
    // The partner must carry the reversed labels and the negated c, exactly.
    const auto& a = v.signature.labels;
    const auto& b = w.signature.labels;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[a.size() - 1 - i])
        throw std::logic_error("Knapp-Stein partner labels are not reversed");
    if (w.signature.c != -v.signature.c)
      throw std::logic_error("Knapp-Stein partner c is not negated");
    seen[v.id] = seen[w.id] = true;
    pairs.emplace_back(std::min(v.id, w.id), std::max(v.id, w.id));
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

std::vector<long> all_ones(int n) { return std::vector<long>(n, 1); }

// Side of the Knapp-Stein pair: at unit labels the weight is rho and
// c(rho-image) = -1/2*(sum rho - 2*sum of flipped rho entries), so the sign
// is a function of the flip set alone.  Negative means the minus side.  At
// rank 6 it is never zero; elsewhere a zero is broken towards the
// lexicographically smaller flip set.
Side side_of(const std::vector<int>& flips, int n) {
  const int total = n * (n - 1) / 2;
  int flipped = 0;
  for (int j : flips) flipped += n - j;
  if (2 * flipped != total) return 2 * flipped < total ? Side::minus : Side::plus;
  std::vector<int> complement;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(flips.begin(), flips.end(), i)) complement.push_back(i);
  return flips < complement ? Side::minus : Side::plus;
}

void assign_names_rank6(std::vector<ERVertex>& vertices,
                        const std::optional<std::vector<long>>& labels) {
  std::map<std::string, std::string> name_of;
  for (const auto& ref : reference_signatures_rank6()) {
    std::string key;
    if (labels) {
      for (const auto& f : ref.labels) key += to_string(f.eval_at(*labels)) + ";";
      key += to_string(ref.c.eval_at(*labels));
    } else {
      for (const auto& f : ref.labels) key += f.text() + ";";
      key += ref.c.text();
    }
    name_of.emplace(std::move(key), ref.name);
  }
  if (name_of.size() != reference_signatures_rank6().size())
    throw std::logic_error("reference signatures collide at these labels");
  for (auto& v : vertices) {
    std::string key;
    for (const auto& f : v.signature.labels) key += f.text() + ";";
    key += v.signature.c.text();
    auto it = name_of.find(key);
    // Fall back to the flip-set name; verification reports the mismatch.
    v.signature.name = it != name_of.end() ? it->second : v.coset.flip_name();
  }
}

}  // namespace

Multiplet build_multiplet(int rank, const std::optional<std::vector<long>>& labels,
                          AlgebraTag algebra, ExecMode mode) {
  const RootSystemD rs = RootSystemD::build(rank);
  if (labels && static_cast<int>(labels->size()) != rank)
    throw std::invalid_argument("need exactly " + std::to_string(rank) + " labels");
  const WeightVec seed = labels ? rs.lambda_plus_rho(*labels) : rs.lambda_plus_rho_symbolic();

  Multiplet m;
  m.algebra = algebra;
  m.rank = rank;
  m.labels = labels;

  for (auto& rep : coset_reps(rank)) {
    ERVertex v;
    v.weight = canonicalize(act(rep.element, seed));
    v.signature = signature_of(rs, v.weight);
    v.coset = std::move(rep);
    m.vertices.push_back(std::move(v));
  }
  const std::size_t expected = std::size_t(1) << (rank - 1);
  if (m.vertices.size() != expected)
    throw std::logic_error("vertex count != 2^(rank-1)");

  // Deterministic vertex order: ascending c at the rho point (so the
  // dominant vertex comes first and its Knapp-Stein partner last), weight
  // order breaking ties.
  const auto ones = all_ones(rank);
  std::sort(m.vertices.begin(), m.vertices.end(),
            [&](const ERVertex& a, const ERVertex& b) {
              const Rational ca = a.signature.c.eval_at(ones);
              const Rational cb = b.signature.c.eval_at(ones);
              if (ca != cb) return ca < cb;
              return a.weight < b.weight;
            });
  for (std::size_t i = 0; i < m.vertices.size(); ++i) m.vertices[i].id = static_cast<int>(i);

  for (auto& v : m.vertices) {
    v.side = side_of(v.coset.flip_set, rank);
    v.has_finite_dim_subrep = v.coset.flip_set.empty();
    v.has_discrete_series_metadata =
        algebra == AlgebraTag::so_star && static_cast<int>(v.coset.flip_set.size()) == rank;
    v.signature.name = v.coset.flip_name();
  }
  if (rank == 6) assign_names_rank6(m.vertices, labels);

  m.edges = bgg_edges(rs, m.vertices, mode);
  transitive_reduction(m.edges, static_cast<int>(m.vertices.size()));
  m.ks_pairs = ks_pairing(m.vertices);
  return m;
}

BigInt weyl_dim(int rank, const std::vector<long>& labels) {
  const RootSystemD rs = RootSystemD::build(rank);
  const WeightVec x = rs.lambda_plus_rho(labels);
  Rational dim = 1;
  for (const auto& a : rs.positive_roots())
    dim *= Rational(rs.pairing(x, a).constant_term() /
                    rs.pairing(rs.rho(), a).constant_term());
  if (!is_integer(dim) || dim <= 0)
    throw std::logic_error("Weyl dimension did not come out a positive integer");
  return numerator(dim);
}

}  // namespace ermult
