#include "ermult/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace ermult {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (all_pass() ? "verification passed" : "verification FAILED") << "\n";
  return os.str();
}

std::string diff_signatures(const Multiplet& m,
                            const std::vector<ReferenceSignature>& expected) {
  auto key = [](const std::vector<LinForm>& labels, const LinForm& c) {
    std::string k;
    for (const auto& f : labels) k += f.text() + ";";
    return k + c.text();
  };
  std::map<std::string, std::string> want;  // key -> name
  for (const auto& r : expected) want.emplace(key(r.labels, r.c), r.name);

  std::ostringstream os;
  std::set<std::string> matched;
  for (const auto& v : m.vertices) {
    const std::string k = key(v.signature.labels, v.signature.c);
    auto it = want.find(k);
    if (it == want.end())
      os << "  unexpected signature at vertex " << v.id << " (" << v.signature.name
         << "): " << k << "\n";
    else
      matched.insert(k);
  }
  for (const auto& [k, name] : want)
    if (!matched.count(k)) os << "  missing row " << name << ": " << k << "\n";
  return os.str();
}

namespace {

void add(VerifyReport& rep, const std::string& name, bool pass, std::string detail = "") {
  rep.checks.push_back({name, pass, std::move(detail)});
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

VerifyReport run_verify(const RunConfig& cfg) {
  const int n = cfg.rank;
  VerifyReport rep;

  // Full-group oracle.
  const auto group = brute_force_group(n, cfg.exec);
  const long expected_order = (long(1) << (n - 1)) * factorial(n);
  add(rep, "group order", static_cast<long>(group.size()) == expected_order,
      std::to_string(group.size()) + " elements, expected " +
          std::to_string(expected_order));

  bool even = true;
  for (const auto& w : group)
    if (w.flip_count() % 2 != 0) even = false;
  add(rep, "even sign flips", even);

  // Orbit-quotient of a random regular weight against the coset classes.
  std::mt19937 rng(cfg.seed);
  std::uniform_int_distribution<long> dist(1, 9);
  std::vector<long> labels(n);
  for (auto& v : labels) v = dist(rng);
  const RootSystemD rs = RootSystemD::build(n);
  const WeightVec x = rs.lambda_plus_rho(labels);
  std::vector<Rational> coords;
  for (const auto& c : x.coords) coords.push_back(c.constant_term());

  const auto classes = orbit_classes(group, coords, cfg.exec);
  const std::size_t expected_classes = std::size_t(1) << (n - 1);

  std::set<std::vector<Rational>> coset_images;
  for (const auto& rep_elem : coset_reps(n)) {
    const WeightVec y = canonicalize(act(rep_elem.element, x));
    std::vector<Rational> v;
    for (const auto& c : y.coords) v.push_back(c.constant_term());
    coset_images.insert(std::move(v));
  }
  const bool quotient_ok =
      classes.size() == expected_classes && coset_images.size() == expected_classes &&
      std::equal(classes.begin(), classes.end(), coset_images.begin());
  {
    std::ostringstream d;
    d << classes.size() << " orbit classes vs " << coset_images.size()
      << " coset images (expected " << expected_classes << ")";
    add(rep, "orbit-quotient classes", quotient_ok, d.str());
  }

  // Signature table (rank 6 only).
  const Multiplet m = build_multiplet(n, std::nullopt, cfg.algebra, cfg.exec);
  if (n == 6) {
    const std::string diff = diff_signatures(m, reference_signatures_rank6());
    add(rep, "signature table", diff.empty(),
        diff.empty() ? std::to_string(m.vertices.size()) + "/" +
                           std::to_string(m.vertices.size()) + " signatures match"
                     : "\n" + diff);
  }

  // Knapp-Stein involution: every vertex paired once, sides opposite.
  bool ks_ok = m.ks_pairs.size() * 2 == m.vertices.size();
  std::vector<int> hit(m.vertices.size(), 0);
  for (const auto& [a, b] : m.ks_pairs) {
    if (a == b) ks_ok = false;
    ++hit[a];
    ++hit[b];
    if (m.vertices[a].side == m.vertices[b].side) ks_ok = false;
  }
  for (int h : hit)
    if (h != 1) ks_ok = false;
  add(rep, "Knapp-Stein involution", ks_ok,
      std::to_string(m.ks_pairs.size()) + " pairs");

  // Every non-composite arrow carries a bare m_i.
  std::size_t reduced_count = 0;
  bool simple = true;
  for (const auto& e : m.edges) {
    if (!e.reduced) continue;
    ++reduced_count;
    if (!e.label) simple = false;
  }
  add(rep, "arrow-label simplicity", simple,
      std::to_string(reduced_count) + " reduced edges, all single-indeterminate");

  // DAG shape on the reduced arrows.
  std::vector<int> indeg(m.vertices.size(), 0), outdeg(m.vertices.size(), 0);
  std::vector<std::vector<int>> adj(m.vertices.size());
  for (const auto& e : m.edges) {
    if (!e.reduced) continue;
    ++outdeg[e.from];
    ++indeg[e.to];
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  int sources = 0, sinks = 0;
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    if (indeg[v] == 0) ++sources;
    if (outdeg[v] == 0) ++sinks;
  }
  std::vector<int> stack{0};
  std::vector<bool> seen(m.vertices.size(), false);
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  const bool dag_ok = sources == 1 && sinks == 1 && indeg[0] == 0 &&
                      outdeg[m.vertices.size() - 1] == 0 && reached == m.vertices.size();
  {
    std::ostringstream d;
    d << sources << " source, " << sinks << " sink, " << reached << "/"
      << m.vertices.size() << " connected";
    add(rep, "reduced-edge DAG shape", dag_ok, d.str());
  }

  return rep;
}

}  // namespace ermult
