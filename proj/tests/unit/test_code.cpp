#include <doctest.h>

#include <bit>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qc/covering.hpp"
#include "qc/errors.hpp"
#include "qc/kernels.hpp"
#include "qc/linear_code.hpp"
#include "qc/paper_data.hpp"
#include "qc/reed_muller.hpp"

using namespace qc;

namespace {

LinearCode random_code(int n, int k, std::mt19937_64& rng) {
  std::vector<Word> rows;
  while (true) {
    rows.clear();
    for (int i = 0; i < k; ++i) rows.push_back(rng() & low_mask(n));
    if (oracle::rank(rows) == k) return LinearCode::from_words(n, rows);
  }
}

}  // namespace

TEST_SUITE("code") {
  TEST_CASE("weight distributions match direct enumeration") {
    const auto rm4 = rm1(4);
    const auto d = weight_distribution(rm4);
    CHECK(d.counts == oracle::weights(testing::gens(rm4), 16));
    CHECK(d.at(0) == 1);
    CHECK(d.at(8) == 30);
    CHECK(d.at(16) == 1);
    CHECK(d.total() == 32);

    const auto c = load_code("C_{16,6,2}");
    CHECK(weight_distribution(c).counts == oracle::weights(testing::gens(c), 16));
    CHECK(testing::nonzero(weight_distribution(c)) == std::vector<std::uint64_t>{1, 4, 54, 4, 1});

    const auto z = weight_distribution(LinearCode::zero(8));
    CHECK(z.at(0) == 1);
    CHECK(z.total() == 1);
  }

  TEST_CASE("weight distribution is symmetric when the all-one word is present") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
      auto c = random_code(20, 6, rng).extended(low_mask(20));
      const auto d = weight_distribution(c);
      for (int i = 0; i <= 20; ++i) CHECK(d.at(i) == d.at(20 - i));
    }
  }

  TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(weight_distribution(LinearCode::full(29)), CapacityError);
    CHECK(weight_distribution(LinearCode::full(12)).total() == 4096);
  }

  TEST_CASE("serial and parallel weight kernels agree") {
    std::mt19937_64 rng(17);
    for (int k : {1, 5, 14, 17, 20}) {
      const auto c = random_code(40, k, rng);
      CHECK(kernels::weight_counts_serial(c.words(), 40) == kernels::weight_counts_parallel(c.words(), 40));
    }
  }

  TEST_CASE("minimum weights") {
    CHECK(min_weight(load_code("C_{16,6,1}")) == 6);
    CHECK(min_weight(load_code("C_{32,9,92}")) == 8);
    CHECK(min_weight(rm1(5)) == 16);
    CHECK_THROWS_AS(min_weight(LinearCode::zero(8)), std::invalid_argument);
  }

  TEST_CASE("subcode containment") {
    const auto c = load_code("C_{16,6,1}");
    const auto rm = rm1_fixed(4);
    CHECK(contains(c, rm));
    CHECK_FALSE(contains(rm, c));
    CHECK(contains(c, c));
    CHECK_THROWS_AS(contains(c, rm1(3)), std::invalid_argument);
  }

  TEST_CASE("dual codes") {
    const auto c = load_code("C_{16,8,1}");
    CHECK(dual(c) == c);
    CHECK(dual(LinearCode::full(4)).dimension() == 0);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + static_cast<int>(rng() % 30);
      const int k = 1 + static_cast<int>(rng() % (n - 1));
      const auto a = random_code(n, k, rng);
      const auto d = dual(a);
      CHECK(d.dimension() == n - k);
      for (Word x : a.words()) {
        for (Word y : d.words()) CHECK(popcount(x & y) % 2 == 0);
      }
      CHECK(dual(d) == a);
    }
  }

  TEST_CASE("divisibility classes") {
    CHECK(divisibility(load_code("C_{32,9,92}")) == Divisibility::triply_even);
    CHECK(divisibility(load_code("C_{16,6,2}")) == Divisibility::doubly_even);
    CHECK(divisibility(load_code("C_{16,6,1}")) == Divisibility::none);
    CHECK(to_string(Divisibility::doubly_even) == "doubly_even");
  }

  TEST_CASE("doubly even codes are self-orthogonal") {
    for (const char* id : {"C_{16,6,2}", "C_{16,7,2}"}) {
      const auto c = load_code(id);
      CHECK(is_self_orthogonal(c));
      CHECK(contains(dual(c), c));
    }
    for (const char* id : {"C_{16,6,1}", "C_{8,5}", "C_{32,9,1}"}) {
      const auto g = testing::gens(load_code(id));
      bool even = true;
      for (auto x : g) {
        for (auto y : g) even = even && std::popcount(x & y) % 2 == 0;
      }
      CHECK(is_self_orthogonal(load_code(id)) == even);
    }
    CHECK_FALSE(is_self_orthogonal(LinearCode::full(4)));
  }

  TEST_CASE("coset tables") {
    CHECK(coset_table(load_code("C_{16,6,1}"), rm1_fixed(4)).representatives.size() == 2);

    const auto t = coset_table(LinearCode::full(8), rm1(3));
    CHECK(t.representatives.size() == 16);
    CHECK(t.representatives.front().is_zero());
    CHECK(std::count(t.min_weights.begin(), t.min_weights.end(), 2) == 7);

    const auto c = load_code("C_{16,7,1}");
    const auto self = coset_table(c, c);
    CHECK(self.representatives.size() == 1);
    CHECK(self.representatives.front().is_zero());

    CHECK_THROWS_AS(coset_table(rm1_fixed(4), load_code("C_{16,6,1}")), std::invalid_argument);
  }

  TEST_CASE("coset representatives are lexicographically least of minimum weight") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
      const auto sub = random_code(10, 3, rng);
      const auto amb = sub.extended(rng() & low_mask(10)).extended(rng() & low_mask(10));
      const auto table = coset_table(amb, sub);
      const auto sub_words = oracle::span_words(testing::gens(sub));
      CHECK(table.representatives.size() == (std::size_t{1} << (amb.dimension() - sub.dimension())));
      for (std::size_t i = 0; i < table.representatives.size(); ++i) {
        const auto& u = table.representatives[i];
        BitVector best = u;
        for (Word s : sub_words) {
          const BitVector v(10, u.word() ^ s);
          if (v.weight() < best.weight() || (v.weight() == best.weight() && lex_less(v, best))) best = v;
        }
        CHECK(best == u);
        CHECK(table.min_weights[i] == u.weight());
        for (std::size_t j = 0; j < i; ++j) {
          CHECK_FALSE(sub.contains(u.word() ^ table.representatives[j].word()));
        }
      }
    }
  }

  TEST_CASE("largest coset minimum weight is the covering radius") {
    for (const char* id : {"C_{16,6,1}", "C_{16,7,1}", "C_{16,8,2}", "C_{8,5}"}) {
      const auto c = load_code(id);
      const auto t = coset_table(LinearCode::full(c.length()), c);
      CHECK(*std::max_element(t.min_weights.begin(), t.min_weights.end()) == covering_radius(c));
    }
  }

  TEST_CASE("weight distribution is permutation invariant") {
    std::mt19937_64 rng(testing::kSeed);
    const auto c = load_code("C_{32,9,17}");
    const auto d = weight_distribution(c);
    for (int t = 0; t < 10; ++t) CHECK(weight_distribution(permute(c, testing::random_permutation(32, rng))) == d);
    CHECK_THROWS_AS(permute(c, std::vector<int>(32, 0)), std::invalid_argument);
  }

  TEST_CASE("code text format") {
    const auto c = parse_code("# comment\n4 2\n1100\n\n0110\n");
    CHECK(c.length() == 4);
    CHECK(c.dimension() == 2);
    CHECK(parse_code(format_code(c)) == c);

    auto line_of = [](const char* text) {
      try {
        parse_code(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{999};
    };
    CHECK(line_of("4 2\n1100\n") == 2);
    CHECK(line_of("4 1\n11a0\n") == 2);
    CHECK(line_of("4 1\n110\n") == 2);
    CHECK(line_of("4 2\n1100\n1100\n") == 3);
    CHECK(line_of("x\n") == 1);
    CHECK_THROWS_AS(parse_code(""), ParseError);
    CHECK_THROWS_AS(read_code_file("/nonexistent/file.code"), ParseError);
  }
}
