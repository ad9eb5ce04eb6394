#include "powerspec/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "powerspec/charpoly.hpp"
#include "powerspec/error.hpp"
#include "powerspec/groups.hpp"
#include "powerspec/numtheory.hpp"
#include "powerspec/powergraph.hpp"
#include "powerspec/roots.hpp"
#include "powerspec/spectral.hpp"

namespace powerspec {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::PrimePower: return "prime-power";
    case Classification::TwoDistinctPrimes: return "two-primes";
    case Classification::Other: return "other";
  }
  return "?";
}

Classification classify(std::uint64_t n) {
  const auto f = factorize(n);
  if (f.size() == 1) return Classification::PrimePower;
  if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) return Classification::TwoDistinctPrimes;
  return Classification::Other;
}

ConjectureRow scan_row(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("scan needs n >= 2");
  const Graph g = power_graph(make_cyclic(n));
  ConjectureRow row;
  row.n = n;
  row.classification = classify(n);

  const SpectrumFactorization lap = integer_root_factorization(charpoly(laplacian_matrix(g)));
  const SpectrumFactorization dl = integer_root_factorization(charpoly(distance_laplacian_matrix(g)));
  row.laplacian_residual = lap.nonlinear_factors();
  row.distance_residual = dl.nonlinear_factors();
  row.laplacian_integral = row.laplacian_residual.empty();
  row.distance_laplacian_integral = row.distance_residual.empty();

  const auto lap_roots = descending_roots(lap);
  const auto dl_roots = descending_roots(dl);
  row.algebraic_connectivity_integral = lap_roots[lap_roots.size() - 2].exact;
  row.largest_dl_integral = dl_roots.front().exact;

  const bool structural = row.classification != Classification::Other;
  row.laplacian_violation =
      !(row.algebraic_connectivity_integral == row.laplacian_integral && row.laplacian_integral == structural);
  row.distance_violation =
      !(row.largest_dl_integral == row.distance_laplacian_integral && row.distance_laplacian_integral == structural);
  return row;
}

std::vector<ConjectureRow> scan_integrality(std::uint64_t n_max, unsigned threads) {
  if (n_max < 2) throw InvalidArgument("--max-n must be at least 2");
  if (threads == 0) threads = scan_threads_from_env();
  const std::size_t count = n_max - 1;
  std::vector<ConjectureRow> rows(count);
  std::atomic<std::size_t> next{0};
  // Largest n first so the slow rows do not end up last on one worker.
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      const std::uint64_t n = n_max - i;
      rows[n - 2] = scan_row(n);
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

unsigned scan_threads_from_env() {
  for (const char* name : {"TOOL_THREADS", "POWERSPEC_THREADS"}) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      const long k = std::strtol(v, &end, 10);
      if (end != v && *end == '\0' && k > 0) return static_cast<unsigned>(std::min(k, 64L));
    }
  }
  return 1;
}

}  // namespace powerspec
