#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qc/bitvector.hpp"

namespace qc {

// Largest dimension whose 2^k codewords we are willing to enumerate.
inline constexpr int kMaxEnumerationDimension = 28;

// A binary [n,k] code stored as its reduced row-echelon basis. Immutable.
class LinearCode {
 public:
  LinearCode() = default;
  LinearCode(int n, std::span<const BitVector> rows);
  static LinearCode from_words(int n, std::vector<Word> rows);
  static LinearCode zero(int n) { return from_words(n, {}); }
  static LinearCode full(int n);

  int length() const noexcept { return n_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  std::span<const Word> words() const noexcept { return basis_; }
  std::span<const int> pivots() const noexcept { return pivots_; }
  std::vector<BitVector> basis() const;

  Word reduce(Word w) const { return reduce_word(w, basis_, pivots_); }
  bool contains(Word w) const { return reduce(w) == 0; }
  bool contains(const BitVector& v) const;

  // <C, x>.
  LinearCode extended(Word x) const;
  LinearCode extended(const BitVector& x) const { return extended(x.word()); }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  int n_ = 0;
  std::vector<Word> basis_;
  std::vector<int> pivots_;
};

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // counts[i] = A_i

  int length() const { return static_cast<int>(counts.size()) - 1; }
  std::uint64_t total() const;
  std::vector<int> weight_set() const;  // {i : A_i != 0}
  std::uint64_t at(int i) const { return counts.at(static_cast<std::size_t>(i)); }
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// Exhaustive Gray-code enumeration. Throws CapacityError when k exceeds the guard.
WeightDistribution weight_distribution(const LinearCode& c);

// Throws std::invalid_argument for the zero code.
int min_weight(const LinearCode& c);

// D is a subcode of C. Throws std::invalid_argument on length mismatch.
bool contains(const LinearCode& c, const LinearCode& d);

LinearCode dual(const LinearCode& c);

enum class Divisibility { none, doubly_even, triply_even };
Divisibility divisibility(const LinearCode& c);
std::string to_string(Divisibility d);

bool is_self_orthogonal(const LinearCode& c);

// Calls f(word) once for every codeword.
template <class F>
void for_each_codeword(const LinearCode& c, F&& f);

std::vector<Word> codewords(const LinearCode& c);

// Coordinate permutations: perm[i] is the image of coordinate i (0-based).
using Permutation = std::vector<int>;
Word permute_word(Word w, std::span<const int> perm);
LinearCode permute(const LinearCode& c, std::span<const int> perm);
bool is_permutation(std::span<const int> perm, int n);

struct CosetTable {
  LinearCode subcode;
  std::vector<BitVector> representatives;  // zero coset first, then lexicographic
  std::vector<int> min_weights;             // min weight of each coset
};

// One lexicographically-least minimum-weight representative per coset of
// `sub` in `ambient`. Throws std::invalid_argument if sub is not a subcode.
CosetTable coset_table(const LinearCode& ambient, const LinearCode& sub);

// Code text format: "n k" then k rows of n characters from {0,1}.
LinearCode parse_code(std::string_view text);
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& c);
std::string format_code(const LinearCode& c);

}  // namespace qc

#include "qc/kernels.hpp"

namespace qc {

template <class F>
void for_each_codeword(const LinearCode& c, F&& f) {
  kernels::gray_walk(c.words(), 0, std::uint64_t{1} << c.dimension(), std::forward<F>(f));
}

}  // namespace qc
