#include "qc/reed_muller.hpp"

#include <stdexcept>
#include <string>

namespace qc {

namespace {

constexpr std::array<std::string_view, 5> kRm4Rows = {
    "1001011001101001",
    "0101010101010101",
    "0011001100110011",
    "0000111100001111",
    "0000000011111111",
};

constexpr std::array<std::string_view, 6> kRm5Rows = {
    "10010110011010010110100110010110",
    "01010101010101010101010101010101",
    "00110011001100110011001100110011",
    "00001111000011110000111100001111",
    "00000000111111110000000011111111",
    "00000000000000001111111111111111",
};

}  // namespace

LinearCode rm1(int m) {
  if (m < 1 || m > 6) throw std::out_of_range("rm1: m must be in 1..6");
  int len = 2;
  std::vector<Word> rows = {0b01, 0b10};
  for (int level = 2; level <= m; ++level) {
    std::vector<Word> next;
    for (Word u : rows) next.push_back(u | (u << len));  // (u, u)
    next.push_back(low_mask(len) << len);               // (0, 1)
    rows = std::move(next);
    len *= 2;
  }
  return LinearCode::from_words(len, std::move(rows));
}

std::span<const std::string_view> rm1_fixed_rows(int m) {
  if (m == 4) return kRm4Rows;
  if (m == 5) return kRm5Rows;
  throw std::out_of_range("rm1_fixed: m must be 4 or 5");
}

LinearCode rm1_fixed(int m) {
  std::vector<BitVector> rows;
  for (auto r : rm1_fixed_rows(m)) rows.push_back(BitVector::from_string(r));
  return LinearCode(1 << m, rows);
}

LinearCode build(const RmSpec& request) {
  if (request.variant == RmVariant::fixed) {
    // The length-8 fixed system is the recursive code itself.
    return request.m == 3 ? rm1(3) : rm1_fixed(request.m);
  }
  return rm1(request.m);
}

}  // namespace qc
