#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP variant; the two must produce identical results (integer counts,
// candidate lists in index order), which the unit tests and bench check.

#include <bit>
#include <algorithm>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qc/bitvector.hpp"

namespace qc {

using WeightSet = std::bitset<kMaxLength + 1>;

WeightSet make_weight_set(std::initializer_list<int> weights);

namespace kernels {

// Gray-code walk over span(gens): callback(word) for all 2^k words, starting
// at the codeword with index `first` (the Gray image of `first`).
template <class F>
inline void gray_walk(std::span<const Word> gens, std::uint64_t first, std::uint64_t last, F&& f) {
  if (first >= last) return;
  const std::uint64_t g = first ^ (first >> 1);
  Word w = 0;
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if ((g >> r) & 1U) w ^= gens[r];
  }
  f(w);
  for (std::uint64_t i = first + 1; i < last; ++i) {
    w ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
    f(w);
  }
}

// Weight histogram A_0..A_n of span(gens).
std::vector<std::uint64_t> weight_counts_serial(std::span<const Word> gens, int n);
std::vector<std::uint64_t> weight_counts_parallel(std::span<const Word> gens, int n);

// True iff every word of x + span(gens) has its weight in `allowed`.
inline bool coset_within(std::span<const Word> gens, Word x, const WeightSet& allowed) {
  if (!allowed.test(static_cast<std::size_t>(popcount(x)))) return false;
  Word w = x;
  const std::uint64_t total = std::uint64_t{1} << gens.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    w ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
    if (!allowed.test(static_cast<std::size_t>(popcount(w)))) return false;
  }
  return true;
}

// Indices i in [0, count) whose candidate(i) passes coset_within, ascending.
template <class Candidate>
std::vector<std::uint64_t> filter_cosets_serial(std::span<const Word> gens, std::uint64_t count,
                                                Candidate&& candidate, const WeightSet& allowed) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (coset_within(gens, candidate(i), allowed)) out.push_back(i);
  }
  return out;
}

template <class Candidate>
std::vector<std::uint64_t> filter_cosets_parallel(std::span<const Word> gens, std::uint64_t count,
                                                  Candidate&& candidate, const WeightSet& allowed) {
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> found(chunks);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t hi = std::min(count, lo + kChunk);
    auto& bucket = found[static_cast<std::size_t>(c)];
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (coset_within(gens, candidate(i), allowed)) bucket.push_back(i);
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& b : found) out.insert(out.end(), b.begin(), b.end());
  return out;
}

// out = A * B^T for n x n row-major matrices with small integer entries.
void product_transpose_serial(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                              int n, std::span<std::int32_t> out);
void product_transpose_parallel(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                                int n, std::span<std::int32_t> out);

}  // namespace kernels
}  // namespace qc
