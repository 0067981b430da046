#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qc/bitvector.hpp"
#include "qc/linear_code.hpp"

namespace qc {

// n x n matrix with entries in {-1, 0, 1}, row-major.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order, 0) {}
  SignMatrix(int order, std::vector<std::int8_t> entries);

  static SignMatrix identity(int order);

  int order() const noexcept { return order_; }
  std::int8_t at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, std::int8_t v) { entries_[index(i, j)] = v; }
  std::span<const std::int8_t> row(int i) const {
    return std::span<const std::int8_t>(entries_).subspan(index(i, 0), static_cast<std::size_t>(order_));
  }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }
  SignMatrix negated() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }
  int order_ = 0;
  std::vector<std::int8_t> entries_;
};

// (n, k, l, a): W1 W2^T / sqrt(a) is a weighing matrix of weight l, l = k^2 / a.
struct QuwmParams {
  int n = 0;
  int k = 0;
  int l = 0;
  int a = 0;

  bool consistent() const { return a > 0 && static_cast<long long>(l) * a == static_cast<long long>(k) * k; }
  friend bool operator==(const QuwmParams&, const QuwmParams&) = default;
};

// 0 -> +1, 1 -> -1 coordinatewise.
std::vector<std::int8_t> psi(const BitVector& v);

// One member of each complementary pair {c, c + 1}: the member with
// coordinate 1 equal to 0, or a uniformly random member when `rng` is given.
// Output is sorted lexicographically. Throws std::invalid_argument if the
// input is not closed under complementation.
std::vector<BitVector> antipodal_split(std::span<const BitVector> coset,
                                       std::mt19937_64* rng = nullptr);

struct QuwmSet {
  QuwmParams params;
  std::vector<SignMatrix> matrices;
  std::vector<BitVector> coset_representatives;  // u_i, zero coset first
};

// Hadamard matrices from the cosets of the reference RM(1,m) in C. Throws
// std::invalid_argument if C fails the four-weight conditions. A seed picks a
// random antipodal half per pair instead of the canonical one.
QuwmSet build_quwm_set(const LinearCode& c, std::optional<std::uint64_t> seed = std::nullopt);

bool verify_weighing(const SignMatrix& w, int weight);

struct PairCheck {
  bool ok = false;
  std::string reason;       // first problem found, empty when ok
  std::set<int> zero_counts; // zeros per row of W1 W2^T
};

PairCheck verify_quasi_unbiased(const SignMatrix& w1, const SignMatrix& w2, const QuwmParams& p);

struct SetVerification {
  bool all_hadamard = false;
  bool all_pairs = false;
  std::uint64_t pairs_checked = 0;
  std::vector<std::string> failures;  // sorted
  std::set<int> zero_counts;
  bool ok() const { return all_hadamard && all_pairs; }
};

// Checks every matrix and every unordered pair.
SetVerification verify_set(const QuwmSet& s);
SetVerification verify_set_serial(const QuwmSet& s);

// Rows of space-separated -1/0/1.
std::string format_matrix(const SignMatrix& m);
SignMatrix parse_matrix(std::string_view text);

}  // namespace qc
