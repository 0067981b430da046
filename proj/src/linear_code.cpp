#include "qc/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qc/errors.hpp"
#include "qc/kernels.hpp"

namespace qc {

namespace {

constexpr int kParallelEnumerationDimension = 16;

void check_enumerable(const LinearCode& c) {
  if (c.dimension() > kMaxEnumerationDimension) {
    throw CapacityError("dimension " + std::to_string(c.dimension()) +
                        " exceeds enumeration guard k <= " +
                        std::to_string(kMaxEnumerationDimension));
  }
}

}  // namespace

LinearCode::LinearCode(int n, std::span<const BitVector> rows) : n_(n) {
  if (n < 1 || n > kMaxLength) throw std::invalid_argument("code length outside 1..64");
  basis_.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.length() != n) throw std::invalid_argument("generator row length differs from n");
    basis_.push_back(r.word());
  }
  pivots_ = rref_words(basis_);
}

LinearCode LinearCode::from_words(int n, std::vector<Word> rows) {
  if (n < 1 || n > kMaxLength) throw std::invalid_argument("code length outside 1..64");
  LinearCode c;
  c.n_ = n;
  for (Word w : rows) {
    if (w & ~low_mask(n)) throw std::invalid_argument("generator word exceeds code length");
  }
  c.basis_ = std::move(rows);
  c.pivots_ = rref_words(c.basis_);
  return c;
}

LinearCode LinearCode::full(int n) {
  std::vector<Word> rows;
  for (int i = 0; i < n; ++i) rows.push_back(Word{1} << i);
  return from_words(n, std::move(rows));
}

std::vector<BitVector> LinearCode::basis() const {
  std::vector<BitVector> out;
  out.reserve(basis_.size());
  for (Word w : basis_) out.emplace_back(n_, w);
  return out;
}

bool LinearCode::contains(const BitVector& v) const {
  if (v.length() != n_) throw std::invalid_argument("vector length differs from code length");
  return contains(v.word());
}

LinearCode LinearCode::extended(Word x) const {
  std::vector<Word> rows = basis_;
  rows.push_back(x);
  return from_words(n_, std::move(rows));
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t s = 0;
  for (auto v : counts) s += v;
  return s;
}

std::vector<int> WeightDistribution::weight_set() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

WeightDistribution weight_distribution(const LinearCode& c) {
  check_enumerable(c);
  if (c.dimension() >= kParallelEnumerationDimension) {
    return {kernels::weight_counts_parallel(c.words(), c.length())};
  }
  return {kernels::weight_counts_serial(c.words(), c.length())};
}

int min_weight(const LinearCode& c) {
  if (c.dimension() == 0) throw std::invalid_argument("minimum weight of the zero code");
  const auto wd = weight_distribution(c);
  for (int i = 1; i <= c.length(); ++i) {
    if (wd.at(i)) return i;
  }
  return c.length();
}

bool contains(const LinearCode& c, const LinearCode& d) {
  if (c.length() != d.length()) throw std::invalid_argument("contains: length mismatch");
  return std::all_of(d.words().begin(), d.words().end(), [&](Word w) { return c.contains(w); });
}

LinearCode dual(const LinearCode& c) {
  const int n = c.length();
  Word pivot_mask = 0;
  for (int p : c.pivots()) pivot_mask |= Word{1} << p;
  std::vector<Word> rows;
  for (int q = 0; q < n; ++q) {
    if ((pivot_mask >> q) & 1U) continue;
    Word h = Word{1} << q;
    for (std::size_t r = 0; r < c.words().size(); ++r) {
      if ((c.words()[r] >> q) & 1U) h |= Word{1} << c.pivots()[r];
    }
    rows.push_back(h);
  }
  return LinearCode::from_words(n, std::move(rows));
}

Divisibility divisibility(const LinearCode& c) {
  check_enumerable(c);
  int mask = 0;
  for_each_codeword(c, [&](Word w) { mask |= popcount(w); });
  if ((mask & 7) == 0) return Divisibility::triply_even;
  if ((mask & 3) == 0) return Divisibility::doubly_even;
  return Divisibility::none;
}

std::string to_string(Divisibility d) {
  switch (d) {
    case Divisibility::triply_even: return "triply_even";
    case Divisibility::doubly_even: return "doubly_even";
    case Divisibility::none: break;
  }
  return "none";
}

bool is_self_orthogonal(const LinearCode& c) {
  for (Word a : c.words()) {
    for (Word b : c.words()) {
      if (popcount(a & b) & 1) return false;
    }
  }
  return true;
}

std::vector<Word> codewords(const LinearCode& c) {
  check_enumerable(c);
  std::vector<Word> out;
  out.reserve(std::size_t{1} << c.dimension());
  for_each_codeword(c, [&](Word w) { out.push_back(w); });
  return out;
}

bool is_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  return true;
}

Word permute_word(Word w, std::span<const int> perm) {
  Word out = 0;
  for (; w; w &= w - 1) out |= Word{1} << perm[static_cast<std::size_t>(std::countr_zero(w))];
  return out;
}

LinearCode permute(const LinearCode& c, std::span<const int> perm) {
  if (!is_permutation(perm, c.length())) throw std::invalid_argument("invalid permutation");
  std::vector<Word> rows;
  rows.reserve(c.words().size());
  for (Word w : c.words()) rows.push_back(permute_word(w, perm));
  return LinearCode::from_words(c.length(), std::move(rows));
}

CosetTable coset_table(const LinearCode& ambient, const LinearCode& sub) {
  if (!contains(ambient, sub)) throw std::invalid_argument("coset_table: not a subcode");
  check_enumerable(ambient);
  struct Best {
    int weight;
    Word word;
  };
  std::unordered_map<Word, Best> best;
  for_each_codeword(ambient, [&](Word w) {
    const Word key = sub.reduce(w);
    const int wt = popcount(w);
    auto [it, fresh] = best.try_emplace(key, Best{wt, w});
    if (!fresh && (wt < it->second.weight ||
                   (wt == it->second.weight && lex_less(w, it->second.word)))) {
      it->second = {wt, w};
    }
  });
  std::vector<Best> reps;
  reps.reserve(best.size());
  for (const auto& [key, b] : best) reps.push_back(b);
  std::sort(reps.begin(), reps.end(), [](const Best& a, const Best& b) {
    if ((a.word == 0) != (b.word == 0)) return a.word == 0;
    return lex_less(a.word, b.word);
  });
  CosetTable t{sub, {}, {}};
  for (const auto& r : reps) {
    t.representatives.emplace_back(ambient.length(), r.word);
    t.min_weights.push_back(r.weight);
  }
  return t;
}

LinearCode parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_code(in);
}

LinearCode read_code(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty code file", 0);
  int n = 0;
  int k = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> k) || (header >> extra)) {
      throw ParseError("expected header \"n k\"", lineno);
    }
  }
  if (n < 1 || n > kMaxLength) throw ParseError("length n must be in 1..64", lineno);
  if (k < 0 || k > n) throw ParseError("dimension k must be in 0..n", lineno);
  std::vector<Word> rows;
  std::vector<Word> reduced;  // sorted by leading bit, descending
  for (int r = 0; r < k; ++r) {
    if (!next_line()) throw ParseError("expected " + std::to_string(k) + " rows, got " +
                                       std::to_string(r), lineno);
    if (static_cast<int>(line.size()) != n) {
      throw ParseError("row has " + std::to_string(line.size()) + " characters, expected " +
                       std::to_string(n), lineno);
    }
    Word w = 0;
    for (int i = 0; i < n; ++i) {
      const char ch = line[static_cast<std::size_t>(i)];
      if (ch == '1') {
        w |= Word{1} << i;
      } else if (ch != '0') {
        throw ParseError("invalid character '" + std::string(1, ch) + "' at column " +
                         std::to_string(i + 1), lineno);
      }
    }
    Word v = w;
    for (Word b : reduced) {
      if (v & (Word{1} << (63 - std::countl_zero(b)))) v ^= b;
    }
    if (v == 0) throw ParseError("row " + std::to_string(r + 1) + " is linearly dependent on earlier rows", lineno);
    reduced.insert(std::upper_bound(reduced.begin(), reduced.end(), v, std::greater<>{}), v);
    rows.push_back(w);
  }
  if (next_line()) throw ParseError("unexpected trailing content", lineno);
  return LinearCode::from_words(n, std::move(rows));
}

LinearCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_code(in);
}

void write_code(std::ostream& out, const LinearCode& c) {
  out << c.length() << ' ' << c.dimension() << '\n';
  for (Word w : c.words()) out << BitVector(c.length(), w).to_string() << '\n';
}

std::string format_code(const LinearCode& c) {
  std::ostringstream out;
  write_code(out, c);
  return out.str();
}

}  // namespace qc
