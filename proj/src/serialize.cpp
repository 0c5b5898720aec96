#include "ermult/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ermult {

namespace {

using Json = nlohmann::ordered_json;

void check_consistent(const Multiplet& m) {
  const std::size_t expected = m.rank >= 1 ? (std::size_t(1) << (m.rank - 1)) : 0;
  if (m.rank < 4 || m.vertices.empty() || m.vertices.size() != expected)
    throw std::invalid_argument("refusing to serialize an unvalidated multiplet");
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    if (m.vertices[i].id != static_cast<int>(i))
      throw std::invalid_argument("vertex ids are not contiguous");
  for (const auto& e : m.edges)
    if (e.from < 0 || e.to < 0 || e.from >= static_cast<int>(m.vertices.size()) ||
        e.to >= static_cast<int>(m.vertices.size()))
      throw std::invalid_argument("edge references an unknown vertex");
  if (m.ks_pairs.size() * 2 != m.vertices.size())
    throw std::invalid_argument("Knapp-Stein pairing does not cover the vertices");
}

Json form_to_json(const LinForm& f) {
  Json coeffs = Json::array();
  coeffs.push_back(to_string(f.constant_term()));
  for (std::size_t i = 1; i <= f.arity(); ++i) coeffs.push_back(to_string(f.coeff(i)));
  Json j;
  j["coeffs"] = std::move(coeffs);
  j["text"] = f.text();
  return j;
}

const char* side_name(Side s) { return s == Side::minus ? "minus" : "plus"; }

Rational c_at_ones(const ERVertex& v, int rank) {
  return v.signature.c.eval_at(std::vector<long>(rank, 1));
}

}  // namespace

std::string algebra_display_name(AlgebraTag tag, int rank) {
  if (tag == AlgebraTag::so_star) return "so*(" + std::to_string(2 * rank) + ")";
  return "so(" + std::to_string(rank) + "," + std::to_string(rank) + ")";
}

std::string emit_json(const Multiplet& m, bool reduced_only) {
  check_consistent(m);
  Json j;
  j["algebra"] = m.algebra == AlgebraTag::so_star ? "so-star" : "so-split";
  j["rank"] = m.rank;
  if (m.labels)
    j["labels"] = *m.labels;
  else
    j["labels"] = "symbolic";

  Json vertices = Json::array();
  for (const auto& v : m.vertices) {
    Json jv;
    jv["id"] = v.id;
    jv["name"] = v.signature.name;
    Json labels = Json::array();
    for (const auto& f : v.signature.labels) labels.push_back(form_to_json(f));
    jv["labels"] = std::move(labels);
    jv["c"] = form_to_json(v.signature.c);
    jv["d"] = v.signature.d ? form_to_json(*v.signature.d) : Json(nullptr);
    jv["side"] = side_name(v.side);
    Json flags;
    flags["has_finite_dim_subrep"] = v.has_finite_dim_subrep;
    flags["has_discrete_series_metadata"] = v.has_discrete_series_metadata;
    jv["flags"] = std::move(flags);
    vertices.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vertices);

  Json edges = Json::array();
  for (const auto& e : m.edges) {
    if (reduced_only && !e.reduced) continue;
    Json je;
    je["from"] = e.from;
    je["to"] = e.to;
    Json root;
    root["kind"] = e.root.kind == RootKind::Sum ? "sum" : "diff";
    root["i"] = e.root.i;
    root["j"] = e.root.j;
    je["root"] = std::move(root);
    je["m"] = form_to_json(e.m);
    je["reduced"] = e.reduced;
    je["label"] = e.label ? Json(*e.label) : Json(nullptr);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);

  Json pairs = Json::array();
  for (const auto& [a, b] : m.ks_pairs) pairs.push_back(Json::array({a, b}));
  j["ks_pairs"] = std::move(pairs);

  return j.dump(2) + "\n";
}

std::string emit_dot(const Multiplet& m, bool reduced_only) {
  check_consistent(m);
  std::ostringstream os;
  os << "digraph multiplet {\n";
  os << "  // " << algebra_display_name(m.algebra, m.rank) << " main multiplet, "
     << m.vertices.size() << " elementary representations\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box, fontsize=10];\n";

  for (const auto& v : m.vertices) {
    os << "  v" << v.id << " [label=\"" << v.signature.name << "\\nc=" << v.signature.c.text()
       << "\"];\n";
  }

  // Rank the vertices by c at the rho point: the minus side stacks above,
  // the plus side below.
  std::map<Rational, std::vector<int>> by_level;
  for (const auto& v : m.vertices) by_level[c_at_ones(v, m.rank)].push_back(v.id);
  for (const auto& [level, ids] : by_level) {
    os << "  { rank=same;";
    for (int id : ids) os << " v" << id << ";";
    os << " }\n";
  }

  // Invisible midpoint: the bullet the pair halves mirror through.
  os << "  ks_bullet [shape=point, style=invis, label=\"\"];\n";

  for (const auto& e : m.edges) {
    if (reduced_only && !e.reduced) continue;
    os << "  v" << e.from << " -> v" << e.to << " [label=\"";
    if (e.label)
      os << *e.label;
    else
      os << "{" << e.root.i << e.root.j << "} m=" << e.m.text();
    os << "\"];\n";
  }

  for (const auto& [a, b] : m.ks_pairs)
    os << "  v" << a << " -> v" << b
       << " [dir=none, style=dashed, color=gray60, constraint=false];\n";

  os << "}\n";
  return os.str();
}

std::string emit_table(const Multiplet& m) {
  check_consistent(m);
  const int nlabels = m.rank - 1;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"name"};
  for (int i = 1; i <= nlabels; ++i) header.push_back("n" + std::to_string(i));
  header.push_back("c");
  if (m.rank == 6) header.push_back("d");
  header.push_back("side");
  cells.push_back(header);

  for (const auto& v : m.vertices) {
    std::vector<std::string> row{v.signature.name};
    for (const auto& f : v.signature.labels) row.push_back(f.text());
    row.push_back(v.signature.c.text());
    if (m.rank == 6) row.push_back(v.signature.d ? v.signature.d->text() : "-");
    row.push_back(side_name(v.side));
    cells.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

  std::ostringstream os;
  os << "# " << algebra_display_name(m.algebra, m.rank) << " main multiplet, labels ";
  if (m.labels) {
    for (std::size_t i = 0; i < m.labels->size(); ++i)
      os << (i ? "," : "(") << (*m.labels)[i];
    os << ")";
  } else {
    os << "symbolic";
  }
  os << "\n";

  for (std::size_t r = 0; r < cells.size(); ++r) {
    const auto& row = cells[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i] << std::string(widths[i] - row[i].size(), ' ');
      os << (i + 1 < row.size() ? "  " : "");
    }
    os << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : widths) total += w;
      os << std::string(total + 2 * (widths.size() - 1), '-') << "\n";
    }
  }

  if (m.labels) {
    auto top = std::find_if(m.vertices.begin(), m.vertices.end(),
                            [](const ERVertex& v) { return v.has_finite_dim_subrep; });
    os << "\ndim E = " << weyl_dim(m.rank, *m.labels).str()
       << "  (finite-dimensional subspace at " << top->signature.name << ")\n";
  }
  return os.str();
}

}  // namespace ermult
