#pragma once

// Registry of the named vectors and codes of lengths 8, 16 and 32, loaded
// from the embedded fixture data/named_codes.txt, and the claim checker that
// recomputes every stated property from scratch.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qc/bitvector.hpp"
#include "qc/linear_code.hpp"

namespace qc {

struct NamedVector {
  std::string id;  // e.g. "x_{32,8,12}"
  int n = 0;
  std::vector<int> support;  // 1-based, as listed
  bool computed = false;     // found by search rather than transcribed
  BitVector vector() const { return BitVector::from_support(n, support); }
};

struct NamedCode {
  std::string id;  // e.g. "C_{32,9,92}"
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<std::string> generators;  // beyond reference_rm(m), in order
};

struct Fixture {
  std::vector<NamedVector> vectors;
  std::vector<NamedCode> codes;
  std::uint64_t checksum = 0;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Throws ParseError on malformed lines and IntegrityError on a checksum
// mismatch or a code naming an undefined vector.
Fixture parse_fixture(std::string_view text);

std::string_view fixture_text();
const Fixture& fixture();

// Accepts "C_{16,6,1}" and the file-name friendly "C_16_6_1".
std::string normalize_id(std::string_view id);

// Throws UnknownIdError.
const NamedVector& named_vector(std::string_view id);
const NamedCode& named_code(std::string_view id);

// Ids of all named codes of length n (all lengths when n == 0), in
// registry order.
std::vector<std::string> code_ids(int n = 0);

// <RM(1,m), generators...>. Throws IntegrityError if a generator fails to
// raise the dimension, or if the dimension or minimum weight disagree with
// the registry.
LinearCode load_code(std::string_view id);
LinearCode build_code(const NamedCode& c);

struct Claim {
  std::string subject;   // code id or family such as "[32,9]"
  std::string name;      // short claim name, e.g. "min_weight"
  bool pass = false;
  std::string expected;
  std::string observed;
};

struct PaperReport {
  int scope = 0;  // 8, 16, 32, or 0 for all
  std::uint64_t codes = 0;
  std::vector<Claim> claims;  // per-code claims in registry order, then family claims

  bool ok() const;
  std::uint64_t failures() const;
};

struct VerifyOptions {
  bool classification = true;  // cross-check lengths 8 and 16 against classify_all
};

// Recomputes every claim for the named codes of the given length (0: all).
// Throws std::invalid_argument for other scopes.
PaperReport verify_paper(int scope, const VerifyOptions& opt = {});

}  // namespace qc
