#include "qc/quwm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qc/errors.hpp"
#include "qc/four_weight.hpp"
#include "qc/kernels.hpp"

namespace qc {

SignMatrix::SignMatrix(int order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw std::invalid_argument("SignMatrix: entry count is not order^2");
  }
  for (auto e : entries_) {
    if (e < -1 || e > 1) throw std::invalid_argument("SignMatrix: entry outside {-1,0,1}");
  }
}

SignMatrix SignMatrix::identity(int order) {
  SignMatrix m(order);
  for (int i = 0; i < order; ++i) m.set(i, i, 1);
  return m;
}

SignMatrix SignMatrix::negated() const {
  SignMatrix m = *this;
  for (auto& e : m.entries_) e = static_cast<std::int8_t>(-e);
  return m;
}

std::vector<std::int8_t> psi(const BitVector& v) {
  std::vector<std::int8_t> out(static_cast<std::size_t>(v.length()));
  for (int i = 0; i < v.length(); ++i) out[static_cast<std::size_t>(i)] = v.test(i) ? -1 : 1;
  return out;
}

std::vector<BitVector> antipodal_split(std::span<const BitVector> coset, std::mt19937_64* rng) {
  std::vector<BitVector> out;
  if (coset.empty()) return out;
  const int n = coset.front().length();
  const Word ones = low_mask(n);
  std::vector<Word> words;
  for (const auto& v : coset) {
    if (v.length() != n) throw std::invalid_argument("antipodal_split: mixed lengths");
    words.push_back(v.word());
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
    throw std::invalid_argument("antipodal_split: repeated vector");
  }
  std::vector<Word> chosen;
  for (Word w : words) {
    const Word c = w ^ ones;
    if (!std::binary_search(words.begin(), words.end(), c)) {
      throw std::invalid_argument("antipodal_split: complement of " + BitVector(n, w).to_string() +
                                  " missing; set is not antipodal");
    }
    if (w & 1U) continue;  // handle each pair once, from its member with coordinate 1 clear
    if (rng && ((*rng)() & 1U)) {
      chosen.push_back(c);
    } else {
      chosen.push_back(w);
    }
  }
  std::sort(chosen.begin(), chosen.end(), [](Word a, Word b) { return lex_less(a, b); });
  for (Word w : chosen) out.emplace_back(n, w);
  return out;
}

QuwmSet build_quwm_set(const LinearCode& c, std::optional<std::uint64_t> seed) {
  const auto report = check_conditions(c);
  if (!report.ok()) {
    std::string msg = "build_quwm_set: code fails the four-weight conditions:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }
  const auto& cert = *report.certificate;
  const int n = cert.n;
  const LinearCode& rm = reference_rm(cert.m);
  const auto table = coset_table(c, rm);
  const auto rm_words = codewords(rm);

  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  QuwmSet out;
  out.params = {n, n, cert.l, 4 * cert.a * cert.a};
  out.coset_representatives = table.representatives;
  for (const auto& u : table.representatives) {
    std::vector<BitVector> coset;
    coset.reserve(rm_words.size());
    for (Word r : rm_words) coset.emplace_back(n, u.word() ^ r);
    const auto half = antipodal_split(coset, rng ? &*rng : nullptr);
    SignMatrix h(n);
    for (int i = 0; i < n; ++i) {
      const auto& v = half[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) h.set(i, j, v.test(j) ? -1 : 1);
    }
    out.matrices.push_back(std::move(h));
  }
  return out;
}

bool verify_weighing(const SignMatrix& w, int weight) {
  const int n = w.order();
  for (int i = 0; i < n; ++i) {
    int row_nz = 0;
    int col_nz = 0;
    for (int j = 0; j < n; ++j) {
      row_nz += w.at(i, j) != 0;
      col_nz += w.at(j, i) != 0;
    }
    if (row_nz != weight || col_nz != weight) return false;
  }
  std::vector<std::int32_t> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  kernels::product_transpose_serial(w.entries(), w.entries(), n, g);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g[static_cast<std::size_t>(i * n + j)] != (i == j ? weight : 0)) return false;
    }
  }
  return true;
}

PairCheck verify_quasi_unbiased(const SignMatrix& w1, const SignMatrix& w2, const QuwmParams& p) {
  PairCheck res;
  const int n = p.n;
  if (w1.order() != n || w2.order() != n) {
    res.reason = "matrix order differs from n";
    return res;
  }
  if (!p.consistent()) {
    res.reason = "parameters violate l = k^2 / a";
    return res;
  }
  if (!verify_weighing(w1, p.k) || !verify_weighing(w2, p.k)) {
    res.reason = "input is not a weighing matrix of weight k";
    return res;
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int32_t> prod(un * un);
  kernels::product_transpose_serial(w1.entries(), w2.entries(), n, prod);
  std::vector<int> col_nz(un, 0);
  for (std::size_t i = 0; i < un; ++i) {
    int zeros = 0;
    for (std::size_t j = 0; j < un; ++j) {
      const std::int64_t e = prod[i * un + j];
      if (e == 0) {
        ++zeros;
        continue;
      }
      if (e * e != p.a) {
        res.reason = "entry " + std::to_string(e) + " at (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ") is neither 0 nor +-sqrt(a)";
        return res;
      }
      ++col_nz[j];
    }
    res.zero_counts.insert(zeros);
    if (n - zeros != p.l) {
      res.reason = "row " + std::to_string(i + 1) + " has " + std::to_string(n - zeros) +
                   " nonzeros, expected l=" + std::to_string(p.l);
      return res;
    }
  }
  for (std::size_t j = 0; j < un; ++j) {
    if (col_nz[j] != p.l) {
      res.reason = "column " + std::to_string(j + 1) + " has " + std::to_string(col_nz[j]) +
                   " nonzeros, expected l=" + std::to_string(p.l);
      return res;
    }
  }
  // (P / sqrt a)(P / sqrt a)^T = l I  <=>  P P^T = a l I, exactly over the integers.
  const std::int64_t target = static_cast<std::int64_t>(p.a) * p.l;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < un; ++t) {
        s += static_cast<std::int64_t>(prod[i * un + t]) * prod[j * un + t];
      }
      if (s != (i == j ? target : 0)) {
        res.reason = "scaled product is not orthogonal at (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ")";
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

namespace {

struct PairSlot {
  int i = 0;
  int j = 0;
  PairCheck check;
};

SetVerification collect(const QuwmSet& s, std::vector<char> hadamard, std::vector<PairSlot> pairs) {
  SetVerification out;
  out.all_hadamard = true;
  for (std::size_t i = 0; i < hadamard.size(); ++i) {
    if (!hadamard[i]) {
      out.all_hadamard = false;
      out.failures.push_back("H_" + std::to_string(i + 1) + " is not Hadamard");
    }
  }
  out.all_pairs = true;
  for (const auto& p : pairs) {
    out.zero_counts.insert(p.check.zero_counts.begin(), p.check.zero_counts.end());
    if (!p.check.ok) {
      out.all_pairs = false;
      out.failures.push_back("(H_" + std::to_string(p.i + 1) + ", H_" + std::to_string(p.j + 1) +
                             "): " + p.check.reason);
    }
  }
  out.pairs_checked = pairs.size();
  std::sort(out.failures.begin(), out.failures.end());
  (void)s;
  return out;
}

std::vector<PairSlot> pair_slots(std::size_t count) {
  std::vector<PairSlot> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) pairs.push_back({static_cast<int>(i), static_cast<int>(j), {}});
  }
  return pairs;
}

}  // namespace

SetVerification verify_set(const QuwmSet& s) {
  const auto count = s.matrices.size();
  std::vector<char> hadamard(count, 0);
  auto pairs = pair_slots(count);
#pragma omp parallel
  {
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      hadamard[static_cast<std::size_t>(i)] =
          verify_weighing(s.matrices[static_cast<std::size_t>(i)], s.params.n);
    }
#pragma omp for schedule(dynamic)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs.size()); ++p) {
      auto& slot = pairs[static_cast<std::size_t>(p)];
      slot.check = verify_quasi_unbiased(s.matrices[static_cast<std::size_t>(slot.i)],
                                         s.matrices[static_cast<std::size_t>(slot.j)], s.params);
    }
  }
  return collect(s, std::move(hadamard), std::move(pairs));
}

SetVerification verify_set_serial(const QuwmSet& s) {
  const auto count = s.matrices.size();
  std::vector<char> hadamard(count, 0);
  for (std::size_t i = 0; i < count; ++i) hadamard[i] = verify_weighing(s.matrices[i], s.params.n);
  auto pairs = pair_slots(count);
  for (auto& slot : pairs) {
    slot.check = verify_quasi_unbiased(s.matrices[static_cast<std::size_t>(slot.i)],
                                       s.matrices[static_cast<std::size_t>(slot.j)], s.params);
  }
  return collect(s, std::move(hadamard), std::move(pairs));
}

std::string format_matrix(const SignMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) out << (j ? " " : "") << static_cast<int>(m.at(i, j));
    out << '\n';
  }
  return out.str();
}

SignMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::int8_t> entries;
  int order = -1;
  int rows = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::int8_t> row;
    int v = 0;
    while (ls >> v) {
      if (v < -1 || v > 1) throw ParseError("matrix entry outside {-1,0,1}", lineno);
      row.push_back(static_cast<std::int8_t>(v));
    }
    if (!ls.eof()) throw ParseError("non-integer matrix entry", lineno);
    if (row.empty()) continue;
    if (order < 0) order = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != order) throw ParseError("ragged matrix row", lineno);
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  if (order <= 0 || rows != order) throw ParseError("matrix is not square", lineno);
  return SignMatrix(order, std::move(entries));
}

}  // namespace qc
