#include "qc/kernels.hpp"

#include <stdexcept>

namespace qc {

WeightSet make_weight_set(std::initializer_list<int> weights) {
  WeightSet s;
  for (int w : weights) {
    if (w < 0 || w > kMaxLength) throw std::out_of_range("weight outside 0..64");
    s.set(static_cast<std::size_t>(w));
  }
  return s;
}

namespace kernels {

std::vector<std::uint64_t> weight_counts_serial(std::span<const Word> gens, int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  gray_walk(gens, 0, std::uint64_t{1} << gens.size(),
            [&](Word w) { ++counts[static_cast<std::size_t>(popcount(w))]; });
  return counts;
}

void product_transpose_serial(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                              int n, std::span<std::int32_t> out) {
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      std::int32_t s = 0;
      for (std::size_t t = 0; t < un; ++t) s += a[i * un + t] * b[j * un + t];
      out[i * un + j] = s;
    }
  }
}

}  // namespace kernels
}  // namespace qc
