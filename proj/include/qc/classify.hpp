#pragma once

// Layer-by-layer classification of codes satisfying the four-weight
// conditions. Every condition-satisfying [n,k+1] code containing RM(1,m)
// contains a condition-satisfying [n,k] code (drop any word outside RM), so
// growing inequivalent representatives one dimension at a time reaches every
// class.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qc/linear_code.hpp"

namespace qc {

// Weights allowed in an extension of offset a: {0, n/2-a, n/2, n/2+a, n}.
WeightSet target_weights(int n, int a);

enum class ExtensionRoute { dual, leaders };
std::string to_string(ExtensionRoute r);

struct ExtensionSet {
  ExtensionRoute route = ExtensionRoute::leaders;
  std::uint64_t candidates = 0;     // cosets examined
  std::vector<Word> vectors;        // one x per accepted coset, ascending candidate order
  std::vector<LinearCode> codes;    // <C, x>, same order
};

// All <C, x>, one x per coset of C, whose weights lie in target_weights(n, a).
// When every target weight is divisible by 4 only cosets of C inside C^perp
// are examined; otherwise the coset leader table prunes cosets whose leader is
// lighter than n/2 - a. Throws std::invalid_argument if C itself has weights
// outside the target set.
ExtensionSet extensions(const LinearCode& c, int a);

struct ClassRecord {
  LinearCode code;
  std::string key;                 // canonical key
  int a = 0;
  int min_weight = 0;
  WeightDistribution distribution;
  bool maximal = false;
  std::optional<int> covering_radius;  // absent beyond the redundancy guard
  int parent = -1;                 // index in the previous layer, -1 for the RM base
  Word extension = 0;              // code = <parent, extension>
};

struct ClassificationReport {
  int n = 0;
  int k = 0;
  std::uint64_t candidates = 0;    // extension codes canonicalized for this layer
  std::vector<ClassRecord> classes;  // ascending key
};

struct ClassifyOptions {
  bool covering_radii = true;
  int max_radius_redundancy = 26;  // skip radii when n - k exceeds this
};

// Extends every seed by one dimension and reduces by equivalence. Seeds must
// share the offset a. The representative of a class is its first candidate in
// (seed, coset) order, so the result does not depend on the thread count.
// Maximality of the seeds is written back: a seed is maximal iff it has no
// extensions.
ClassificationReport classify_step(std::vector<ClassRecord>& seeds, int a,
                                   const ClassifyOptions& opt = {});

// Layers for one offset, starting from `base` (a copy of RM(1,m)).
std::vector<ClassificationReport> classify_offset(const LinearCode& base, int a,
                                                  const ClassifyOptions& opt = {});

// Rough operation count for classify_all(n), used to explain refusals.
double classification_cost_estimate(int n);

// All offsets merged per dimension, base reference_rm(m). n = 32 requires
// allow_long, otherwise CapacityError; n > 32 is always refused.
std::vector<ClassificationReport> classify_all(int n, bool allow_long,
                                               const ClassifyOptions& opt = {});

}  // namespace qc
