#pragma once

// Packed GF(2) vectors and row reduction.
//
// A BitVector holds up to kMaxLength coordinates in a single machine word.
// Coordinate i (0-based) is bit i; external text formats print coordinate 1
// first and list supports 1-based.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qc {

using Word = std::uint64_t;

inline constexpr int kMaxLength = 64;

inline constexpr Word low_mask(int n) {
  return n >= 64 ? ~Word{0} : ((Word{1} << n) - 1);
}

inline int popcount(Word w) { return std::popcount(w); }

// Sort key that orders words like their printed 0/1 strings.
inline Word lex_key(Word w) {
  w = ((w >> 1) & 0x5555555555555555ULL) | ((w & 0x5555555555555555ULL) << 1);
  w = ((w >> 2) & 0x3333333333333333ULL) | ((w & 0x3333333333333333ULL) << 2);
  w = ((w >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((w & 0x0F0F0F0F0F0F0F0FULL) << 4);
  w = ((w >> 8) & 0x00FF00FF00FF00FFULL) | ((w & 0x00FF00FF00FF00FFULL) << 8);
  w = ((w >> 16) & 0x0000FFFF0000FFFFULL) | ((w & 0x0000FFFF0000FFFFULL) << 16);
  return (w >> 32) | (w << 32);
}

inline bool lex_less(Word a, Word b) { return lex_key(a) < lex_key(b); }

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int length);
  BitVector(int length, Word bits);

  // Positions are 1-based and must be distinct; throws std::out_of_range.
  static BitVector from_support(int n, std::span<const int> support);
  static BitVector from_support(int n, std::initializer_list<int> support) {
    return from_support(n, std::span<const int>(support.begin(), support.size()));
  }
  // Characters '0'/'1', coordinate 1 first. Throws std::invalid_argument.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(int n) { return BitVector(n, low_mask(n)); }

  int length() const noexcept { return length_; }
  Word word() const noexcept { return bits_; }
  int weight() const noexcept { return popcount(bits_); }
  bool is_zero() const noexcept { return bits_ == 0; }

  bool test(int i) const { return (bits_ >> i) & 1U; }
  void set(int i, bool value = true);
  void flip(int i);

  std::vector<int> support() const;  // 1-based
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int length_ = 0;
  Word bits_ = 0;
};

// Coordinatewise XOR / AND; lengths must agree (std::invalid_argument).
BitVector add(const BitVector& u, const BitVector& v);
BitVector bit_and(const BitVector& u, const BitVector& v);

// Lexicographic order on the printed strings; lengths must agree.
bool lex_less(const BitVector& u, const BitVector& v);

struct RowEchelon {
  std::vector<BitVector> basis;
  int rank = 0;
};

// Reduced row-echelon basis of the row span. Pivots are the leftmost set
// coordinates; rows come out ordered by pivot.
RowEchelon rref(std::span<const BitVector> rows);

// Word-level RREF in place; returns the pivot column of each output row.
std::vector<int> rref_words(std::vector<Word>& rows);

// Reduce `w` against an RREF basis with the given pivots.
inline Word reduce_word(Word w, std::span<const Word> basis, std::span<const int> pivots) {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if ((w >> pivots[r]) & 1U) w ^= basis[r];
  }
  return w;
}

}  // namespace qc
