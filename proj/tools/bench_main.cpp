// Benchmark comparing the serial reference kernels with the OpenMP ones.
// Workloads: Weyl group closure, orbit-quotient canonicalization, the BGG
// edge scan at a higher rank, and batched numeric multiplet evaluation.

#include "ermult/multiplet.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>

using namespace ermult;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return ms_since(t0);
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
              serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int rank = 6;
  int scan_rank = 8;
  int batch = 2000;
  unsigned seed = 1;
  app.add_option("--rank", rank, "rank for the group kernels (<= 6)");
  app.add_option("--scan-rank", scan_rank, "rank for the symbolic edge-scan kernel");
  app.add_option("--batch", batch, "number of numeric label vectors to evaluate");
  app.add_option("--seed", seed, "label RNG seed");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads available: %d\n", hardware_threads());

  // 1. Weyl group closure.
  std::vector<SignedPerm> g_serial, g_parallel;
  const double c_s = timed([&] { g_serial = brute_force_group(rank, ExecMode::serial); });
  const double c_p = timed([&] { g_parallel = brute_force_group(rank, ExecMode::parallel); });
  report("group closure", c_s, c_p, g_serial == g_parallel);

  // 2. Orbit-quotient canonicalization over the full group.
  const RootSystemD rs = RootSystemD::build(rank);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(1, 9);
  std::vector<long> labels(rank);
  for (auto& v : labels) v = dist(rng);
  std::vector<Rational> coords;
  for (const auto& c : rs.lambda_plus_rho(labels).coords)
    coords.push_back(c.constant_term());
  std::vector<std::vector<Rational>> q_serial, q_parallel;
  const double o_s = timed([&] { q_serial = orbit_classes(g_serial, coords, ExecMode::serial); });
  const double o_p =
      timed([&] { q_parallel = orbit_classes(g_serial, coords, ExecMode::parallel); });
  report("orbit quotient", o_s, o_p, q_serial == q_parallel);

  // 3. Symbolic multiplet build (edge scan dominates at higher rank).
  Multiplet m_serial, m_parallel;
  const double e_s = timed(
      [&] { m_serial = build_multiplet(scan_rank, std::nullopt, AlgebraTag::so_star, ExecMode::serial); });
  const double e_p = timed([&] {
    m_parallel = build_multiplet(scan_rank, std::nullopt, AlgebraTag::so_star, ExecMode::parallel);
  });
  bool edges_equal = m_serial.edges.size() == m_parallel.edges.size();
  for (std::size_t i = 0; edges_equal && i < m_serial.edges.size(); ++i)
    edges_equal = m_serial.edges[i].from == m_parallel.edges[i].from &&
                  m_serial.edges[i].to == m_parallel.edges[i].to &&
                  m_serial.edges[i].m == m_parallel.edges[i].m &&
                  m_serial.edges[i].reduced == m_parallel.edges[i].reduced;
  char scan_name[64];
  std::snprintf(scan_name, sizeof scan_name, "edge scan (rank %d)", scan_rank);
  report(scan_name, e_s, e_p, edges_equal);

  // 4. Batched numeric evaluation: signatures plus Weyl dimension.
  std::vector<std::vector<long>> batch_labels(batch, std::vector<long>(rank));
  for (auto& vec : batch_labels)
    for (auto& v : vec) v = dist(rng);
  std::vector<BigInt> dims_serial(batch), dims_parallel(batch);
  auto eval_one = [&](int i, std::vector<BigInt>& out) {
    const Multiplet m =
        build_multiplet(rank, batch_labels[i], AlgebraTag::so_star, ExecMode::serial);
    out[i] = weyl_dim(rank, batch_labels[i]) + static_cast<int>(m.edges.size());
  };
  const double b_s = timed([&] {
    for (int i = 0; i < batch; ++i) eval_one(i, dims_serial);
  });
  const double b_p = timed([&] {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < batch; ++i) eval_one(i, dims_parallel);
  });
  report("numeric batch", b_s, b_p, dims_serial == dims_parallel);
  return 0;
}
