#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qc/linear_code.hpp"

namespace qc {

// Exact base-2 logarithm; throws std::invalid_argument if n is not 2^m, m >= 2.
int length_exponent(int n);

// The copy of RM(1,m) that condition (2) is tested against: the fixed
// matrices for m = 4, 5 and the recursive code otherwise.
const LinearCode& reference_rm(int m);

struct FourWeightCertificate {
  int n = 0;
  int m = 0;
  int k = 0;
  int a = 0;                  // nonzero weights are n/2 - a, n/2, n/2 + a, n
  int l = 0;                  // (n / 2a)^2
  std::uint64_t set_size = 0; // 2^(k-m-1) quasi-unbiased matrices
  WeightDistribution expected;
};

struct ConditionReport {
  bool c1 = false;  // four nonzero weights {n/2-a, n/2, n/2+a, n} with admissible a
  bool c2 = false;  // contains the reference RM(1,m)
  std::vector<int> weight_set;
  WeightDistribution observed;
  std::vector<std::string> violations;  // every failing clause, in check order
  std::optional<FourWeightCertificate> certificate;

  bool ok() const { return certificate.has_value(); }
};

ConditionReport check_conditions(const LinearCode& c);

// Weight distribution forced by the two conditions. Throws
// std::invalid_argument for inconsistent parameters.
WeightDistribution expected_distribution(int n, int m, int k, int a);

// All a with a | 2^(m-1), 0 < a < n/2 and (n/2a)^2 <= n, ascending.
std::vector<int> admissible_offsets(int n);

}  // namespace qc
