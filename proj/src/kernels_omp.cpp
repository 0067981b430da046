#include <omp.h>

#include "qc/kernels.hpp"

namespace qc::kernels {

std::vector<std::uint64_t> weight_counts_parallel(std::span<const Word> gens, int n) {
  const std::uint64_t total = std::uint64_t{1} << gens.size();
  const auto bins = static_cast<std::size_t>(n) + 1;
  // Fixed block size so the partition does not depend on the thread count.
  constexpr std::uint64_t kBlock = std::uint64_t{1} << 14;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> counts(bins, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
      const std::uint64_t hi = std::min(total, lo + kBlock);
      gray_walk(gens, lo, hi, [&](Word w) { ++local[static_cast<std::size_t>(popcount(w))]; });
    }
#pragma omp critical
    for (std::size_t i = 0; i < bins; ++i) counts[i] += local[i];
  }
  return counts;
}

void product_transpose_parallel(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                                int n, std::span<std::int32_t> out) {
  const auto un = static_cast<std::size_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(un); ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = 0; j < un; ++j) {
      std::int32_t s = 0;
      for (std::size_t t = 0; t < un; ++t) s += a[i * un + t] * b[j * un + t];
      out[i * un + j] = s;
    }
  }
}

}  // namespace qc::kernels
