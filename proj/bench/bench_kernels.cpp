// Serial reference kernels against their OpenMP counterparts. Each row runs
// both on the same input, checks that the results agree, and reports the
// best wall time over the repetitions.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qc/classify.hpp"
#include "qc/kernels.hpp"
#include "qc/paper_data.hpp"
#include "qc/quwm.hpp"

using namespace qc;

namespace {

double best_ms(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const char* kernel, const std::string& workload, double serial, double parallel, bool agree) {
  std::printf("%-18s %-28s %10.2f %10.2f %8.2fx  %s\n", kernel, workload.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::mt19937_64 rng(7);
  bool all_agree = true;

  std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-18s %-28s %10s %10s %9s\n", "kernel", "workload", "serial ms", "omp ms", "speedup");

  {
    std::vector<Word> gens(22);
    for (auto& g : gens) g = rng();
    std::vector<std::uint64_t> s, p;
    const double ts = best_ms(reps, [&] { s = kernels::weight_counts_serial(gens, 64); });
    const double tp = best_ms(reps, [&] { p = kernels::weight_counts_parallel(gens, 64); });
    row("weight_counts", "random [64,22]", ts, tp, s == p);
    all_agree = all_agree && s == p;
  }

  {
    const auto c = load_code("C_{32,9,1}");
    const auto gens = c.words();
    const auto allowed = target_weights(32, 4);
    const std::uint64_t count = std::uint64_t{1} << 18;
    const auto candidate = [](std::uint64_t i) {
      std::uint64_t z = (i + 1) * 0x9E3779B97F4A7C15ULL;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      // supported on the first 12 coordinates
      return (z ^ (z >> 31)) & 0xFFFu;
    };
    std::vector<std::uint64_t> s, p;
    const double ts = best_ms(reps, [&] { s = kernels::filter_cosets_serial(gens, count, candidate, allowed); });
    const double tp = best_ms(reps, [&] { p = kernels::filter_cosets_parallel(gens, count, candidate, allowed); });
    row("filter_cosets", "C_{32,9,1}, 2^18 candidates", ts, tp, s == p);
    all_agree = all_agree && s == p;
  }

  {
    const int n = 256;
    std::vector<std::int8_t> a(static_cast<std::size_t>(n) * n), b(a.size());
    for (auto& x : a) x = (rng() & 1) ? 1 : -1;
    for (auto& x : b) x = (rng() & 1) ? 1 : -1;
    std::vector<std::int32_t> s(a.size()), p(a.size());
    const double ts = best_ms(reps, [&] { kernels::product_transpose_serial(a, b, n, s); });
    const double tp = best_ms(reps, [&] { kernels::product_transpose_parallel(a, b, n, p); });
    row("product_transpose", "random 256x256 sign", ts, tp, s == p);
    all_agree = all_agree && s == p;
  }

  {
    const auto set = build_quwm_set(load_code("C_{32,10,102}"));
    SetVerification s, p;
    const double ts = best_ms(reps, [&] { s = verify_set_serial(set); });
    const double tp = best_ms(reps, [&] { p = verify_set(set); });
    const bool agree = s.failures == p.failures && s.pairs_checked == p.pairs_checked && s.ok() == p.ok();
    row("verify_set", "C_{32,10,102}, 16 matrices", ts, tp, agree);
    all_agree = all_agree && agree;
  }

  return all_agree ? 0 : 1;
}
