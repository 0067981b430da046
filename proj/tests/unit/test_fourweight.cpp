#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qc/four_weight.hpp"
#include "qc/paper_data.hpp"
#include "qc/reed_muller.hpp"

using namespace qc;

namespace {

// Direct substitution, kept separate from the library's own arithmetic.
std::vector<std::uint64_t> formula(int n, int m, int k, int a) {
  const std::uint64_t l = static_cast<std::uint64_t>((n / (2 * a)) * (n / (2 * a)));
  const std::uint64_t s = (std::uint64_t{1} << (k - m - 1)) - 1;
  return {1, s * l, 2 * static_cast<std::uint64_t>(n) - 2 + s * (2 * static_cast<std::uint64_t>(n) - 2 * l), s * l, 1};
}

}  // namespace

TEST_SUITE("fourweight") {
  TEST_CASE("certificates") {
    const auto r = check_conditions(load_code("C_{16,6,1}"));
    REQUIRE(r.ok());
    CHECK(r.certificate->a == 2);
    CHECK(r.certificate->l == 16);
    CHECK(r.certificate->set_size == 2);

    const auto r8 = check_conditions(load_code("C_{8,5}"));
    REQUIRE(r8.ok());
    CHECK(r8.certificate->a == 2);
    CHECK(r8.certificate->l == 4);
    CHECK(r8.certificate->set_size == 2);
  }

  TEST_CASE("RM(1,4) alone fails condition (1) only") {
    const auto r = check_conditions(rm1_fixed(4));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.c1);
    CHECK(r.c2);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].rfind("condition (1): weight set {0,8,16}", 0) == 0);
  }

  TEST_CASE("every violated clause is reported") {
    // Even-weight code of length 16: weights 0,2,...,16 and contains RM(1,4).
    const auto r = check_conditions(LinearCode::full(16));
    CHECK_FALSE(r.c1);
    CHECK(r.c2);
    const auto shifted = permute(load_code("C_{16,6,1}"), std::vector<int>{1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
    const auto s = check_conditions(shifted);
    CHECK(s.c1);
    CHECK_FALSE(s.c2);
    CHECK(s.violations.size() == 1);
    const auto both = check_conditions(permute(rm1_fixed(4), std::vector<int>{1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}));
    CHECK(both.violations.size() == 2);
    CHECK_THROWS_AS(check_conditions(LinearCode::full(12)), std::invalid_argument);
  }

  TEST_CASE("expected distribution") {
    auto nz = [](const WeightDistribution& d) { return testing::nonzero(d); };
    CHECK(nz(expected_distribution(16, 4, 6, 4)) == std::vector<std::uint64_t>{1, 4, 54, 4, 1});
    CHECK(nz(expected_distribution(16, 4, 8, 4)) == std::vector<std::uint64_t>{1, 28, 198, 28, 1});
    const auto d8 = expected_distribution(8, 3, 5, 2);
    CHECK(d8.at(0) == 1);
    CHECK(d8.at(2) == 4);
    CHECK(d8.at(4) == 22);
    CHECK(d8.at(6) == 4);
    CHECK(d8.at(8) == 1);
    CHECK(d8.total() == 32);
    CHECK_THROWS_AS(expected_distribution(16, 4, 6, 3), std::invalid_argument);
    CHECK_THROWS_AS(expected_distribution(16, 4, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(expected_distribution(12, 4, 6, 2), std::invalid_argument);
  }

  TEST_CASE("expected distribution agrees with substitution and enumeration") {
    for (const auto& id : code_ids()) {
      const auto c = load_code(id);
      const auto r = check_conditions(c);
      REQUIRE(r.ok());
      const auto& cert = *r.certificate;
      CHECK(testing::nonzero(cert.expected) == formula(cert.n, cert.m, cert.k, cert.a));
      CHECK(cert.expected == weight_distribution(c));
      CHECK(cert.a == cert.n / 2 - min_weight(c));
    }
  }

  TEST_CASE("admissible offsets") {
    CHECK(admissible_offsets(8) == std::vector<int>{2});
    CHECK(admissible_offsets(16) == std::vector<int>{2, 4});
    CHECK(admissible_offsets(32) == std::vector<int>{4, 8});
  }

  TEST_CASE("permutations: condition (1) is invariant, condition (2) is not") {
    std::mt19937_64 rng(testing::kSeed);
    const auto c = load_code("C_{32,9,5}");
    const auto base = check_conditions(c);
    int c2_lost = 0;
    for (int t = 0; t < 20; ++t) {
      const auto r = check_conditions(permute(c, testing::random_permutation(32, rng)));
      CHECK(r.c1);
      CHECK(r.weight_set == base.weight_set);
      c2_lost += !r.c2;
    }
    CHECK(c2_lost > 0);
    // A permutation that maps RM(1,5) onto itself keeps both conditions.
    std::vector<int> flip(32);
    for (int i = 0; i < 32; ++i) flip[static_cast<std::size_t>(i)] = i ^ 1;
    REQUIRE(permute(rm1_fixed(5), flip) == rm1_fixed(5));
    const auto r = check_conditions(permute(c, flip));
    CHECK(r.ok());
    CHECK(r.certificate->a == base.certificate->a);
    CHECK(r.certificate->l == base.certificate->l);
  }
}
