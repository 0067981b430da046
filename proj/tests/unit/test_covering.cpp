#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qc/covering.hpp"
#include "qc/equivalence.hpp"
#include "qc/errors.hpp"
#include "qc/four_weight.hpp"
#include "qc/paper_data.hpp"
#include "qc/reed_muller.hpp"

using namespace qc;

namespace {

LinearCode even_weight(int n) {
  std::vector<Word> rows;
  for (int i = 0; i + 1 < n; ++i) rows.push_back((Word{1} << i) | (Word{1} << (n - 1)));
  return LinearCode::from_words(n, rows);
}

}  // namespace

TEST_SUITE("covering") {
  TEST_CASE("covering radii") {
    CHECK(covering_radius(load_code("C_{16,7,1}")) == 4);
    CHECK(covering_radius(even_weight(8)) == 1);
    CHECK(covering_radius(rm1(3)) == oracle::covering_radius(testing::gens(rm1(3)), 8));
    CHECK(covering_radius(rm1(3)) == 2);
  }

  TEST_CASE("BFS agrees with brute force on every small code") {
    std::vector<LinearCode> codes{rm1(2), rm1(3), rm1(4), even_weight(8), even_weight(16)};
    for (const auto& id : code_ids(8)) codes.push_back(load_code(id));
    for (const auto& id : code_ids(16)) codes.push_back(load_code(id));
    std::mt19937_64 rng(testing::kSeed);
    for (int t = 0; t < 30; ++t) {
      const int n = 4 + static_cast<int>(rng() % 9);
      std::vector<Word> rows;
      for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) rows.push_back(rng() & low_mask(n));
      const auto c = LinearCode::from_words(n, rows);
      if (c.dimension() > 0) codes.push_back(c);
    }
    for (const auto& c : codes) {
      const auto p = coset_leader_profile(c);
      CHECK(p.radius == oracle::covering_radius(testing::gens(c), c.length()));
      CHECK(p.leader_weight[0] == 0);
      CHECK(*std::max_element(p.leader_weight.begin(), p.leader_weight.end()) == p.radius);
      std::uint64_t total = 0;
      for (auto h : p.histogram) total += h;
      CHECK(total == (std::uint64_t{1} << (c.length() - c.dimension())));
    }
  }

  TEST_CASE("leader histogram is permutation invariant") {
    std::mt19937_64 rng(9);
    const auto c = load_code("C_{16,7,2}");
    const auto h = coset_leader_profile(c).histogram;
    for (int t = 0; t < 10; ++t) {
      CHECK(coset_leader_profile(permute(c, testing::random_permutation(16, rng))).histogram == h);
    }
  }

  TEST_CASE("syndrome map") {
    const auto c = load_code("C_{16,6,1}");
    const SyndromeMap map(c);
    CHECK(map.redundancy() == 10);
    for (Word w : codewords(c)) CHECK(map.syndrome(w) == 0);
    for (std::uint32_t s = 0; s < 1024; s += 37) CHECK(map.syndrome(map.lift(s)) == s);
  }

  TEST_CASE("guard") {
    CHECK_THROWS_AS(covering_radius(LinearCode::from_words(40, {1})), CapacityError);
  }

  TEST_CASE("maximality") {
    {
      const auto c = load_code("C_{32,10,1}");
      const auto m = is_maximal(c, *check_conditions(c).certificate);
      CHECK(m.maximal);
      CHECK(m.path == MaximalityPath::fast);
      CHECK(m.covering_radius == 10);
    }
    {
      const auto c = load_code("C_{16,6,1}");
      const auto m = is_maximal(c, *check_conditions(c).certificate);
      CHECK_FALSE(m.maximal);
      REQUIRE(m.witness);
      CHECK(m.witness->dimension() == 7);
      CHECK(contains(*m.witness, c));
      CHECK(check_conditions(*m.witness).ok());
      CHECK(are_equivalent(*m.witness, load_code("C_{16,7,1}")).equivalent);
    }
    for (const char* id : {"C_{16,8,1}", "C_{16,8,2}", "C_{16,7,1}", "C_{8,7}"}) {
      const auto c = load_code(id);
      CHECK(is_maximal(c, *check_conditions(c).certificate).maximal);
    }
  }

  TEST_CASE("fast and slow paths agree") {
    for (const auto& id : code_ids(16)) {
      const auto c = load_code(id);
      const auto cert = *check_conditions(c).certificate;
      const auto fast = is_maximal(c, cert);
      const auto slow = is_maximal_slow(c, cert);
      CHECK(fast.maximal == slow.maximal);
      CHECK(slow.path == MaximalityPath::slow);
    }
    for (const char* id : {"C_{32,11,1}", "C_{32,10,7}"}) {
      const auto c = load_code(id);
      const auto cert = *check_conditions(c).certificate;
      CHECK(is_maximal(c, cert).maximal == is_maximal_slow(c, cert).maximal);
    }
  }
}
