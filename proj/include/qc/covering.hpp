#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qc/four_weight.hpp"
#include "qc/linear_code.hpp"

namespace qc {

// Syndrome tables are 2^(n-k) bytes.
inline constexpr int kMaxRedundancy = 26;

// Maps vectors to syndromes: the coordinates outside the pivot columns of the
// code's RREF basis, compressed to n-k bits. Syndrome 0 is the code itself.
class SyndromeMap {
 public:
  explicit SyndromeMap(const LinearCode& c);

  int redundancy() const noexcept { return static_cast<int>(free_columns_.size()); }
  std::uint32_t syndrome(Word w) const;
  // A vector with the given syndrome (supported on free columns only).
  Word lift(std::uint32_t s) const;
  std::uint32_t column_syndrome(int j) const { return column_syndromes_[static_cast<std::size_t>(j)]; }

 private:
  const LinearCode* code_;
  std::vector<int> free_columns_;
  std::vector<std::uint32_t> column_syndromes_;
};

struct CosetLeaderProfile {
  int n = 0;
  int k = 0;
  std::vector<std::uint8_t> leader_weight;  // indexed by syndrome
  int radius = 0;
  std::vector<std::uint64_t> histogram;  // histogram[w] = cosets with leader weight w
};

// Breadth-first relaxation over the syndrome space. Throws CapacityError when
// n - k exceeds kMaxRedundancy.
CosetLeaderProfile coset_leader_profile(const LinearCode& c);
int covering_radius(const LinearCode& c);

enum class MaximalityPath { fast, slow };
std::string to_string(MaximalityPath p);

struct MaximalityResult {
  bool maximal = false;
  MaximalityPath path = MaximalityPath::fast;
  int covering_radius = 0;
  std::uint64_t cosets_scanned = 0;
  std::optional<LinearCode> witness;  // <C, x> still satisfying condition (1)
};

// Whether no <C, x> with x outside C keeps the weight set of C.
MaximalityResult is_maximal(const LinearCode& c, const FourWeightCertificate& cert);

// Same question answered by scanning every coset, ignoring the radius shortcut.
MaximalityResult is_maximal_slow(const LinearCode& c, const FourWeightCertificate& cert);

}  // namespace qc
