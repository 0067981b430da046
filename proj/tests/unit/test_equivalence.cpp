#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qc/classify.hpp"
#include "qc/equivalence.hpp"
#include "qc/errors.hpp"
#include "qc/paper_data.hpp"
#include "qc/reed_muller.hpp"

using namespace qc;

namespace {

std::vector<LinearCode> small_codes() {
  std::vector<LinearCode> out;
  for (const auto& id : code_ids(8)) out.push_back(load_code(id));
  for (const auto& id : code_ids(16)) out.push_back(load_code(id));
  out.push_back(rm1(3));
  out.push_back(rm1(4));
  return out;
}

}  // namespace

TEST_SUITE("equivalence") {
  TEST_CASE("keys are invariant under random permutations") {
    std::mt19937_64 rng(testing::kSeed);
    std::vector<LinearCode> codes = small_codes();
    for (const char* id : {"C_{32,9,1}", "C_{32,9,92}", "C_{32,10,50}", "C_{32,11,2}"}) codes.push_back(load_code(id));
    for (const auto& c : codes) {
      const auto base = canonical_form(c);
      CHECK(permute(c, base.witness) == base.canonical);
      for (int t = 0; t < 100; ++t) {
        const auto p = canonical_form(permute(c, testing::random_permutation(c.length(), rng)));
        REQUIRE(p.key == base.key);
        CHECK(p.canonical == base.canonical);
      }
    }
  }

  TEST_CASE("distinct classes get distinct keys") {
    CHECK(canonical_form(load_code("C_{16,6,1}")).key != canonical_form(load_code("C_{16,6,2}")).key);
    CHECK(canonical_form(load_code("C_{16,8,1}")).key != canonical_form(load_code("C_{16,8,2}")).key);
    CHECK_FALSE(are_equivalent(load_code("C_{32,11,1}"), load_code("C_{32,11,2}")).equivalent);
  }

  TEST_CASE("witnesses map one code onto the other") {
    std::mt19937_64 rng(41);
    for (const auto& c : small_codes()) {
      const auto p = testing::random_permutation(c.length(), rng);
      const auto d = permute(c, p);
      const auto r = are_equivalent(c, d);
      REQUIRE(r.equivalent);
      CHECK(permute(c, *r.witness) == d);
    }
    const auto c = load_code("C_{16,7,2}");
    std::vector<int> rev(16);
    for (int i = 0; i < 16; ++i) rev[static_cast<std::size_t>(i)] = 15 - i;
    CHECK(are_equivalent(c, permute(c, rev)).equivalent);
  }

  TEST_CASE("agreement with the brute-force oracle on small codes") {
    const auto codes = small_codes();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (std::size_t j = i; j < codes.size(); ++j) {
        const auto& a = codes[i];
        const auto& b = codes[j];
        if (a.length() != b.length() || a.dimension() != b.dimension()) continue;
        const bool keys = canonical_form(a).key == canonical_form(b).key;
        CHECK(keys == oracle::equivalent(testing::gens(a), testing::gens(b), a.length()));
      }
    }
  }

  TEST_CASE("agreement with the oracle on same-distribution candidates") {
    // All extensions of RM(1,4) share one weight distribution per offset,
    // so only the canonical form separates them.
    for (int a : {2, 4}) {
      const auto ext = extensions(rm1_fixed(4), a);
      const auto first = ext.codes.front();
      const auto key = canonical_form(first).key;
      for (std::size_t i = 1; i < ext.codes.size(); i += 3) {
        const bool same = canonical_form(ext.codes[i]).key == key;
        CHECK(same == oracle::equivalent(testing::gens(first), testing::gens(ext.codes[i]), 16));
      }
    }
  }

  TEST_CASE("length-8 extensions of RM(1,3) are all one class") {
    const auto ext = extensions(rm1(3), 2);
    REQUIRE(ext.codes.size() == 7);
    for (const auto& c : ext.codes) CHECK(are_equivalent(c, load_code("C_{8,5}")).equivalent);
  }

  TEST_CASE("fast rejection and edge cases") {
    CHECK_FALSE(are_equivalent(rm1(3), rm1(4)).equivalent);
    CHECK_FALSE(are_equivalent(load_code("C_{16,6,1}"), load_code("C_{16,7,1}")).equivalent);
    CHECK_FALSE(are_equivalent(load_code("C_{16,6,1}"), load_code("C_{16,6,2}")).equivalent);
    CHECK(are_equivalent(LinearCode::zero(5), LinearCode::zero(5)).equivalent);
    CHECK_THROWS_AS(canonical_form(LinearCode::zero(4)), std::invalid_argument);
    CHECK_THROWS_AS(canonical_form(rm1(6)), CapacityError);
  }

  TEST_CASE("permutation helpers") {
    const Permutation p{2, 0, 1};
    CHECK(compose(p, inverse(p)) == Permutation{0, 1, 2});
    CHECK(compose(p, p) == Permutation{1, 2, 0});
    CHECK(key_hex(std::string("\x01\xab", 2)) == "01ab");
  }
}
