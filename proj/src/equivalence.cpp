#include "qc/equivalence.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "qc/errors.hpp"

namespace qc {

namespace {

// Invariant words: weight classes in ascending order while they fit the budget.
constexpr std::size_t kWordBudget = 1024;
constexpr int kMaxCanonicalDimension = 24;

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

using Colors = std::vector<int>;  // color = start position of the coordinate's cell

class Canonizer {
 public:
  explicit Canonizer(const LinearCode& c) : code_(c), n_(c.length()) {
    select_words();
    incidence_.resize(static_cast<std::size_t>(n_));
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (Word x = words_[w]; x; x &= x - 1) {
        incidence_[static_cast<std::size_t>(std::countr_zero(x))].push_back(static_cast<int>(w));
      }
    }
    word_hash_.resize(words_.size());
  }

  CanonicalForm run() {
    Colors root(static_cast<std::size_t>(n_), 0);
    std::vector<int> seq;
    search(root, seq);
    CanonicalForm out;
    out.witness = best_perm_;
    out.canonical = LinearCode::from_words(n_, best_cert_);
    out.key.push_back(static_cast<char>(n_));
    out.key.push_back(static_cast<char>(code_.dimension()));
    for (Word w : best_cert_) {
      for (int b = 0; b < 8; ++b) out.key.push_back(static_cast<char>((w >> (8 * b)) & 0xFF));
    }
    out.nodes = nodes_;
    out.leaves = leaves_;
    out.generators = generators_.size();
    return out;
  }

 private:
  void select_words() {
    std::vector<std::vector<Word>> by_weight(static_cast<std::size_t>(n_) + 1);
    for_each_codeword(code_, [&](Word w) {
      const int wt = popcount(w);
      if (wt > 0 && wt < n_) by_weight[static_cast<std::size_t>(wt)].push_back(w);
    });
    for (auto& cls : by_weight) {
      if (cls.empty()) continue;
      if (!words_.empty() && words_.size() + cls.size() > kWordBudget) break;
      word_weight_.insert(word_weight_.end(), cls.size(), popcount(cls.front()));
      words_.insert(words_.end(), cls.begin(), cls.end());
    }
  }

  static int cell_count(const Colors& col) {
    std::vector<int> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  void refine(Colors& col) {
    int cells = cell_count(col);
    std::vector<std::pair<std::pair<int, std::uint64_t>, int>> keyed(static_cast<std::size_t>(n_));
    while (cells < n_) {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t h = mix(static_cast<std::uint64_t>(word_weight_[w]) << 32);
        for (Word x = words_[w]; x; x &= x - 1) {
          h += mix(static_cast<std::uint64_t>(col[static_cast<std::size_t>(std::countr_zero(x))]) + 1);
        }
        word_hash_[w] = h;
      }
      for (int j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (int w : incidence_[static_cast<std::size_t>(j)]) {
          s += mix(word_hash_[static_cast<std::size_t>(w)]);
        }
        keyed[static_cast<std::size_t>(j)] = {{col[static_cast<std::size_t>(j)], s}, j};
      }
      std::sort(keyed.begin(), keyed.end());
      int next_cells = 0;
      for (std::size_t pos = 0; pos < keyed.size(); ++pos) {
        if (pos == 0 || keyed[pos].first != keyed[pos - 1].first) {
          ++next_cells;
          col[static_cast<std::size_t>(keyed[pos].second)] = static_cast<int>(pos);
        } else {
          col[static_cast<std::size_t>(keyed[pos].second)] =
              col[static_cast<std::size_t>(keyed[pos - 1].second)];
        }
      }
      if (next_cells == cells) break;
      cells = next_cells;
    }
  }

  std::vector<Word> certificate(const Colors& perm) const {
    std::vector<Word> rows;
    rows.reserve(code_.words().size());
    for (Word w : code_.words()) rows.push_back(permute_word(w, perm));
    rref_words(rows);
    return rows;
  }

  // Orbits of the subgroup generated by stored automorphisms that fix the
  // prefix pointwise.
  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& g : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return g[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int i = 0; i < n_; ++i) {
        const int a = find(i);
        const int b = find(g[static_cast<std::size_t>(i)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = find(i);
    return parent;
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t t = 0;
    while (t < a.size() && t < b.size() && a[t] == b[t]) ++t;
    return t;
  }

  // Records the automorphism relating a stored leaf to the current one and
  // returns the depth to resume at, or INT_MAX when no jump is justified.
  int automorphism(const Permutation& stored_perm, const std::vector<int>& stored_seq,
                   const Permutation& perm, const std::vector<int>& seq) {
    const Permutation gamma = compose(inverse(perm), stored_perm);
    bool identity = true;
    for (int i = 0; i < n_; ++i) identity = identity && gamma[static_cast<std::size_t>(i)] == i;
    if (!identity) generators_.push_back(gamma);
    const std::size_t t = common_prefix(stored_seq, seq);
    if (t >= stored_seq.size() || t >= seq.size()) return INT_MAX;
    for (std::size_t i = 0; i <= t; ++i) {
      if (gamma[static_cast<std::size_t>(stored_seq[i])] != seq[i]) return INT_MAX;
    }
    return static_cast<int>(t);
  }

  int leaf(const Colors& col, const std::vector<int>& seq) {
    ++leaves_;
    const Permutation& perm = col;
    auto cert = certificate(perm);
    if (!have_first_) {
      have_first_ = true;
      first_perm_ = best_perm_ = perm;
      first_seq_ = best_seq_ = seq;
      first_cert_ = best_cert_ = cert;
      return INT_MAX;
    }
    if (cert == first_cert_) return automorphism(first_perm_, first_seq_, perm, seq);
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_perm_ = perm;
      best_seq_ = seq;
      return INT_MAX;
    }
    if (cert == best_cert_) return automorphism(best_perm_, best_seq_, perm, seq);
    return INT_MAX;
  }

  int search(Colors col, std::vector<int>& seq) {
    ++nodes_;
    refine(col);
    if (cell_count(col) == n_) return leaf(col, seq);

    // First non-singleton cell.
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : col) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int p = 0; p < n_; ++p) {
      if (size[static_cast<std::size_t>(p)] > 1) {
        target = p;
        break;
      }
    }
    std::vector<int> members;
    for (int j = 0; j < n_; ++j) {
      if (col[static_cast<std::size_t>(j)] == target) members.push_back(j);
    }

    const int depth = static_cast<int>(seq.size());
    std::vector<int> done;
    for (int u : members) {
      if (!done.empty() && !generators_.empty()) {
        const auto orbit = orbits_fixing(seq);
        const bool seen = std::any_of(done.begin(), done.end(), [&](int d) {
          return orbit[static_cast<std::size_t>(d)] == orbit[static_cast<std::size_t>(u)];
        });
        if (seen) continue;
      }
      done.push_back(u);
      Colors child = col;
      for (int j : members) {
        if (j != u) child[static_cast<std::size_t>(j)] = target + 1;
      }
      seq.push_back(u);
      const int r = search(std::move(child), seq);
      seq.pop_back();
      if (r < depth) return r;
    }
    return INT_MAX;
  }

  const LinearCode& code_;
  int n_;
  std::vector<Word> words_;
  std::vector<int> word_weight_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::uint64_t> word_hash_;

  bool have_first_ = false;
  Permutation first_perm_, best_perm_;
  std::vector<int> first_seq_, best_seq_;
  std::vector<Word> first_cert_, best_cert_;
  std::vector<Permutation> generators_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

CanonicalForm canonical_form(const LinearCode& c) {
  if (c.dimension() < 1) throw std::invalid_argument("canonical_form: zero code");
  if (c.length() > kMaxCanonicalLength || c.dimension() > kMaxCanonicalDimension) {
    throw CapacityError("canonical_form supports n <= 32 and k <= 24");
  }
  return Canonizer(c).run();
}

std::string key_hex(const std::string& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (char ch : key) {
    const auto b = static_cast<unsigned char>(ch);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

EquivalenceResult are_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return {};
  if (a.dimension() == 0) {
    Permutation id(static_cast<std::size_t>(a.length()));
    std::iota(id.begin(), id.end(), 0);
    return {true, id};
  }
  if (weight_distribution(a) != weight_distribution(b)) return {};
  const auto ca = canonical_form(a);
  const auto cb = canonical_form(b);
  if (ca.key != cb.key) return {};
  return {true, compose(inverse(cb.witness), ca.witness)};
}

}  // namespace qc
