#include "qc/covering.hpp"

#include <stdexcept>

#include "qc/errors.hpp"
#include "qc/kernels.hpp"

namespace qc {

SyndromeMap::SyndromeMap(const LinearCode& c) : code_(&c) {
  Word pivot_mask = 0;
  for (int p : c.pivots()) pivot_mask |= Word{1} << p;
  for (int j = 0; j < c.length(); ++j) {
    if (!((pivot_mask >> j) & 1U)) free_columns_.push_back(j);
  }
  if (redundancy() > 32) throw CapacityError("syndrome wider than 32 bits");
  for (int j = 0; j < c.length(); ++j) column_syndromes_.push_back(syndrome(Word{1} << j));
}

std::uint32_t SyndromeMap::syndrome(Word w) const {
  const Word r = code_->reduce(w);
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < free_columns_.size(); ++i) {
    s |= static_cast<std::uint32_t>((r >> free_columns_[i]) & 1U) << i;
  }
  return s;
}

Word SyndromeMap::lift(std::uint32_t s) const {
  Word w = 0;
  for (std::size_t i = 0; i < free_columns_.size(); ++i) {
    if ((s >> i) & 1U) w |= Word{1} << free_columns_[i];
  }
  return w;
}

CosetLeaderProfile coset_leader_profile(const LinearCode& c) {
  const int r = c.length() - c.dimension();
  if (r > kMaxRedundancy) {
    throw CapacityError("n-k = " + std::to_string(r) + " exceeds syndrome table guard " +
                        std::to_string(kMaxRedundancy));
  }
  const SyndromeMap map(c);
  const std::size_t size = std::size_t{1} << r;
  constexpr std::uint8_t kUnseen = 0xFF;
  CosetLeaderProfile prof;
  prof.n = c.length();
  prof.k = c.dimension();
  prof.leader_weight.assign(size, kUnseen);

  std::vector<std::uint32_t> cols;
  for (int j = 0; j < c.length(); ++j) {
    const auto s = map.column_syndrome(j);
    if (s != 0) cols.push_back(s);
  }
  // Level-synchronous sweep: no queue, the table itself is the frontier.
  prof.leader_weight[0] = 0;
  std::size_t reached = 1;
  int depth = 0;
  for (; reached < size; ++depth) {
    std::size_t grew = 0;
    for (std::size_t s = 0; s < size; ++s) {
      if (prof.leader_weight[s] != depth) continue;
      for (auto col : cols) {
        const std::size_t t = s ^ col;
        if (prof.leader_weight[t] == kUnseen) {
          prof.leader_weight[t] = static_cast<std::uint8_t>(depth + 1);
          ++grew;
        }
      }
    }
    if (grew == 0) throw std::logic_error("syndrome space not connected");
    reached += grew;
  }
  prof.radius = depth;
  prof.histogram.assign(static_cast<std::size_t>(prof.radius) + 1, 0);
  for (auto w : prof.leader_weight) ++prof.histogram[w];
  return prof;
}

int covering_radius(const LinearCode& c) { return coset_leader_profile(c).radius; }

std::string to_string(MaximalityPath p) { return p == MaximalityPath::fast ? "fast" : "slow"; }

namespace {

MaximalityResult scan_cosets(const LinearCode& c, const FourWeightCertificate& cert,
                             const CosetLeaderProfile& prof) {
  const int half = c.length() / 2;
  const int lightest = half - cert.a;
  const WeightSet allowed = make_weight_set({lightest, half, half + cert.a});
  const SyndromeMap map(c);

  std::vector<std::uint32_t> candidates;
  for (std::size_t s = 1; s < prof.leader_weight.size(); ++s) {
    if (prof.leader_weight[s] >= lightest) candidates.push_back(static_cast<std::uint32_t>(s));
  }
  const auto hits = kernels::filter_cosets_parallel(
      c.words(), candidates.size(), [&](std::uint64_t i) { return map.lift(candidates[i]); },
      allowed);

  MaximalityResult res;
  res.path = MaximalityPath::slow;
  res.covering_radius = prof.radius;
  res.cosets_scanned = candidates.size();
  res.maximal = hits.empty();
  if (!hits.empty()) res.witness = c.extended(map.lift(candidates[hits.front()]));
  return res;
}

}  // namespace

MaximalityResult is_maximal(const LinearCode& c, const FourWeightCertificate& cert) {
  const auto prof = coset_leader_profile(c);
  if (prof.radius < c.length() / 2 - cert.a) {
    // Every coset has a word lighter than the lightest allowed nonzero weight.
    MaximalityResult res;
    res.maximal = true;
    res.path = MaximalityPath::fast;
    res.covering_radius = prof.radius;
    return res;
  }
  return scan_cosets(c, cert, prof);
}

MaximalityResult is_maximal_slow(const LinearCode& c, const FourWeightCertificate& cert) {
  return scan_cosets(c, cert, coset_leader_profile(c));
}

}  // namespace qc
