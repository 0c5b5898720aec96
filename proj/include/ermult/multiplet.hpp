#pragma once

#include "ermult/exec.hpp"
#include "ermult/weylcoset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ermult {

// Signature of an elementary representation: the n-1 labels of the compact
// factor, the character value c, and (rank 6 only) the conformal weight
// d = c + 15/2.
struct Signature {
  std::vector<LinForm> labels;
  LinForm c;
  std::optional<LinForm> d;
  std::string name;
};

enum class Side { minus, plus };

struct ERVertex {
  int id = 0;
  Signature signature;
  WeightVec weight;  // M-dominant sorted image of Lambda+rho
  CosetRep coset;
  Side side = Side::minus;
  bool has_finite_dim_subrep = false;
  bool has_discrete_series_metadata = false;
};

struct BGGEdge {
  int from = 0, to = 0;
  Root root;   // always noncompact
  LinForm m;   // pairing(from.weight, root), a positive-integer-valued form
  bool reduced = true;
  // "i_{jk}" when m is the single indeterminate m_i (symbolic mode).
  std::optional<std::string> label;
};

enum class AlgebraTag { so_star, so_split };

struct Multiplet {
  AlgebraTag algebra = AlgebraTag::so_star;
  int rank = 0;
  std::optional<std::vector<long>> labels;  // nullopt: symbolic
  std::vector<ERVertex> vertices;
  std::vector<BGGEdge> edges;  // full BGG set; reduced flags mark the non-composite arrows
  std::vector<std::pair<int, int>> ks_pairs;  // fixed-point-free involution, each pair once
};

// Sort coordinates into generically decreasing order using cmp_generic.
// Throws std::logic_error if an Incomparable pair is consumed; that cannot
// happen for Weyl images of an admissible Lambda+rho.
WeightVec canonicalize(const WeightVec& x);

// labels_i = y_i - y_{i+1}, c = -1/2 * sum_i y_i, d = c + 15/2 at rank 6.
// y must be canonical; every label form must be positive-integer-valued
// (std::invalid_argument otherwise).
Signature signature_of(const RootSystemD& rs, const WeightVec& y);

// d = c + 15/2; only defined at rank 6.
LinForm conformal_weight_d(const LinForm& c, int rank);

// The full BGG edge scan: one edge per (vertex, noncompact root) whose
// pairing is positive-integer-valued, pointing at the vertex owning the
// canonicalized reflection.  Deterministic order (vertex, then root).
std::vector<BGGEdge> bgg_edges(const RootSystemD& rs, const std::vector<ERVertex>& vertices,
                               ExecMode mode = ExecMode::serial);

// Marks reduced=false on every edge implied by a composition of two or more
// edges (standard DAG transitive reduction).  Throws on a cycle.
void transitive_reduction(std::vector<BGGEdge>& edges, int vertex_count);

// Pairs each vertex with the one carrying reversed labels and negated c.
// Throws std::logic_error if any vertex is unpaired or self-paired.
std::vector<std::pair<int, int>> ks_pairing(const std::vector<ERVertex>& vertices);

// Assemble the main multiplet.  labels == nullopt builds the symbolic
// multiplet; numeric labels must all be >= 1 (degenerate m_i = 0 limits are
// rejected).
Multiplet build_multiplet(int rank, const std::optional<std::vector<long>>& labels,
                          AlgebraTag algebra = AlgebraTag::so_star,
                          ExecMode mode = ExecMode::serial);

// Dimension of the finite-dimensional subspace attached to the dominant
// vertex: prod_{a>0} (Lambda+rho, a) / (rho, a), an exact positive integer.
BigInt weyl_dim(int rank, const std::vector<long>& labels);

}  // namespace ermult
