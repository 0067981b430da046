#pragma once

// Brute-force reference computations. Deliberately naive and independent of
// the library's internals: plain subset enumeration, plain elimination.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::uint64_t;

// Every word of span(gens), by direct subset sums.
inline std::vector<Word> span_words(const std::vector<Word>& gens) {
  std::vector<Word> out;
  const std::uint64_t total = std::uint64_t{1} << gens.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    Word w = 0;
    for (std::size_t r = 0; r < gens.size(); ++r) {
      if ((s >> r) & 1U) w ^= gens[r];
    }
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::uint64_t> weights(const std::vector<Word>& gens, int n) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  for (Word w : span_words(gens)) ++a[static_cast<std::size_t>(std::popcount(w))];
  return a;
}

inline int rank(std::vector<Word> rows) {
  int r = 0;
  for (int bit = 0; bit < 64; ++bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(), [&](Word w) { return (w >> bit) & 1U; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != static_cast<std::size_t>(r) && ((rows[i] >> bit) & 1U)) rows[i] ^= rows[static_cast<std::size_t>(r)];
    }
    ++r;
  }
  return r;
}

// max over x in F_2^n of min over c in C of wt(x + c).
inline int covering_radius(const std::vector<Word>& gens, int n) {
  const auto code = span_words(gens);
  int rho = 0;
  for (Word x = 0; x < (Word{1} << n); ++x) {
    int best = n;
    for (Word c : code) best = std::min(best, std::popcount(x ^ c));
    rho = std::max(rho, best);
  }
  return rho;
}

// Is there a coordinate permutation taking span(a) onto span(b)? Backtracks
// over images of coordinates 0, 1, ..., pruning whenever the multisets of
// (projection onto the fixed coordinates, full weight) differ.
class Equivalence {
 public:
  Equivalence(const std::vector<Word>& a, const std::vector<Word>& b, int n)
      : a_(span_words(a)), b_(span_words(b)), n_(n), image_(static_cast<std::size_t>(n), -1),
        used_(static_cast<std::size_t>(n), false) {}

  bool run() {
    if (a_.size() != b_.size()) return false;
    return profile_a(0) == profile_b(0) && extend(0);
  }
  const std::vector<int>& permutation() const { return image_; }

 private:
  using Profile = std::vector<std::pair<Word, int>>;

  Profile profile_a(int depth) const {
    Profile s;
    const Word mask = depth == 64 ? ~Word{0} : (Word{1} << depth) - 1;
    for (Word w : a_) s.emplace_back(w & mask, std::popcount(w));
    std::sort(s.begin(), s.end());
    return s;
  }
  Profile profile_b(int depth) const {
    Profile s;
    for (Word w : b_) {
      Word p = 0;
      for (int i = 0; i < depth; ++i) p |= ((w >> image_[static_cast<std::size_t>(i)]) & 1U) << i;
      s.emplace_back(p, std::popcount(w));
    }
    std::sort(s.begin(), s.end());
    return s;
  }
  bool extend(int depth) {
    if (depth == n_) return true;
    const Profile target = profile_a(depth + 1);
    for (int j = 0; j < n_; ++j) {
      if (used_[static_cast<std::size_t>(j)]) continue;
      image_[static_cast<std::size_t>(depth)] = j;
      used_[static_cast<std::size_t>(j)] = true;
      if (profile_b(depth + 1) == target && extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(j)] = false;
    }
    image_[static_cast<std::size_t>(depth)] = -1;
    return false;
  }

  std::vector<Word> a_, b_;
  int n_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

inline bool equivalent(const std::vector<Word>& a, const std::vector<Word>& b, int n) {
  return Equivalence(a, b, n).run();
}

}  // namespace oracle
