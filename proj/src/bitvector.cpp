#include "qc/bitvector.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qc {

namespace {

void check_length(int n) {
  if (n < 0 || n > kMaxLength) {
    throw std::invalid_argument("vector length " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxLength) + "]");
  }
}

void check_same_length(const BitVector& u, const BitVector& v) {
  if (u.length() != v.length()) {
    throw std::invalid_argument("length mismatch: " + std::to_string(u.length()) + " vs " +
                                std::to_string(v.length()));
  }
}

}  // namespace

BitVector::BitVector(int length) : length_(length) { check_length(length); }

BitVector::BitVector(int length, Word bits) : length_(length), bits_(bits) {
  check_length(length);
  if (bits & ~low_mask(length)) {
    throw std::invalid_argument("bits set beyond vector length");
  }
}

BitVector BitVector::from_support(int n, std::span<const int> support) {
  BitVector v(n);
  for (int p : support) {
    if (p < 1 || p > n) {
      throw std::out_of_range("support position " + std::to_string(p) + " outside 1.." +
                              std::to_string(n));
    }
    if (v.test(p - 1)) {
      throw std::invalid_argument("repeated support position " + std::to_string(p));
    }
    v.set(p - 1);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(static_cast<int>(i));
    } else if (bits[i] != '0') {
      throw std::invalid_argument(std::string("invalid bit character '") + bits[i] + "'");
    }
  }
  return v;
}

void BitVector::set(int i, bool value) {
  if (i < 0 || i >= length_) throw std::out_of_range("coordinate index out of range");
  const Word bit = Word{1} << i;
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

void BitVector::flip(int i) {
  if (i < 0 || i >= length_) throw std::out_of_range("coordinate index out of range");
  bits_ ^= Word{1} << i;
}

std::vector<int> BitVector::support() const {
  std::vector<int> out;
  for (Word w = bits_; w; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

BitVector add(const BitVector& u, const BitVector& v) {
  check_same_length(u, v);
  return BitVector(u.length(), u.word() ^ v.word());
}

BitVector bit_and(const BitVector& u, const BitVector& v) {
  check_same_length(u, v);
  return BitVector(u.length(), u.word() & v.word());
}

bool lex_less(const BitVector& u, const BitVector& v) {
  check_same_length(u, v);
  return lex_less(u.word(), v.word());
}

std::vector<int> rref_words(std::vector<Word>& rows) {
  std::vector<Word> basis;
  std::vector<int> pivots;
  for (Word w : rows) {
    w = reduce_word(w, basis, pivots);
    if (w == 0) continue;
    const int p = std::countr_zero(w);
    for (auto& b : basis) {
      if ((b >> p) & 1U) b ^= w;
    }
    basis.push_back(w);
    pivots.push_back(p);
  }
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  rows.clear();
  std::vector<int> sorted_pivots;
  for (std::size_t i : order) {
    rows.push_back(basis[i]);
    sorted_pivots.push_back(pivots[i]);
  }
  return sorted_pivots;
}

RowEchelon rref(std::span<const BitVector> rows) {
  RowEchelon out;
  if (rows.empty()) return out;
  const int n = rows.front().length();
  std::vector<Word> words;
  words.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.length() != n) throw std::invalid_argument("rref: rows of unequal length");
    words.push_back(r.word());
  }
  rref_words(words);
  for (Word w : words) out.basis.emplace_back(n, w);
  out.rank = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace qc
