#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qc/linear_code.hpp"
#include "qc/paper_data.hpp"

namespace testing {

inline std::vector<qc::Word> gens(const qc::LinearCode& c) {
  return {c.words().begin(), c.words().end()};
}

inline qc::Permutation random_permutation(int n, std::mt19937_64& rng) {
  qc::Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<std::uint64_t> nonzero(const qc::WeightDistribution& d) {
  std::vector<std::uint64_t> out;
  for (auto v : d.counts) {
    if (v) out.push_back(v);
  }
  return out;
}

inline constexpr std::uint64_t kSeed = 20240917;

}  // namespace testing
