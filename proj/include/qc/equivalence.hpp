#pragma once

// Permutation equivalence of binary codes.
//
// canonical_form() runs an individualization-refinement search over the
// coordinates. Cells are refined against the incidence structure between
// coordinates and a permutation-invariant set of low-weight codewords; every
// leaf of the search tree fixes a coordinate order, and the canonical code is
// the smallest RREF basis (row-wise, as words) among the leaves visited.
// Leaves that reproduce an earlier leaf's code yield automorphisms, which are
// used to skip equivalent subtrees. The key therefore depends only on the
// equivalence class of the input.

#include <cstdint>
#include <optional>
#include <string>

#include "qc/linear_code.hpp"

namespace qc {

inline constexpr int kMaxCanonicalLength = 32;

struct CanonicalForm {
  std::string key;       // n, k, then the canonical basis words, as raw bytes
  Permutation witness;   // input coordinate i goes to canonical coordinate witness[i]
  LinearCode canonical;  // permute(input, witness)
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t generators = 0;
};

CanonicalForm canonical_form(const LinearCode& c);

std::string key_hex(const std::string& key);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Permutation> witness;  // permute(a, *witness) == b
};

EquivalenceResult are_equivalent(const LinearCode& a, const LinearCode& b);

// Inverse and composition helpers for witnesses: (p * q)(i) = p(q(i)).
Permutation inverse(const Permutation& p);
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace qc
