#include "qc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qc/covering.hpp"
#include "qc/equivalence.hpp"
#include "qc/errors.hpp"
#include "qc/four_weight.hpp"
#include "qc/kernels.hpp"

namespace qc {

WeightSet target_weights(int n, int a) {
  return make_weight_set({0, n / 2 - a, n / 2, n / 2 + a, n});
}

std::string to_string(ExtensionRoute r) { return r == ExtensionRoute::dual ? "dual" : "leaders"; }

namespace {

bool all_divisible_by_4(int n, int a) {
  return (n / 2 - a) % 4 == 0 && (n / 2) % 4 == 0 && n % 4 == 0;
}

// Basis of a complement of C inside D (C a subcode of D).
std::vector<Word> complement_basis(const LinearCode& c, const LinearCode& d) {
  std::vector<Word> rows(c.words().begin(), c.words().end());
  std::vector<Word> out;
  for (Word w : d.words()) {
    std::vector<Word> trial = rows;
    trial.push_back(w);
    if (static_cast<int>(rref_words(trial).size()) > static_cast<int>(rows.size())) {
      rows.push_back(w);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

ExtensionSet extensions(const LinearCode& c, int a) {
  const int n = c.length();
  const WeightSet allowed = target_weights(n, a);
  for (int w : weight_distribution(c).weight_set()) {
    if (!allowed.test(static_cast<std::size_t>(w))) {
      throw std::invalid_argument("extensions: code has weight " + std::to_string(w) +
                                  " outside the target set");
    }
  }
  ExtensionSet out;
  const auto gens = c.words();
  std::vector<std::uint64_t> hits;
  std::vector<Word> candidate_words;

  if (all_divisible_by_4(n, a)) {
    // Doubly even codes are self-orthogonal, so x must lie in C^perp.
    out.route = ExtensionRoute::dual;
    const auto comp = complement_basis(c, dual(c));
    if (comp.size() >= 63) throw CapacityError("extensions: complement dimension too large");
    const std::uint64_t count = std::uint64_t{1} << comp.size();
    auto candidate = [&](std::uint64_t i) {
      Word x = 0;
      for (std::size_t r = 0; r < comp.size(); ++r) {
        if ((i >> r) & 1U) x ^= comp[r];
      }
      return x;
    };
    out.candidates = count - 1;
    hits = kernels::filter_cosets_parallel(gens, count, candidate, allowed);
    for (auto i : hits) {
      if (i != 0) candidate_words.push_back(candidate(i));
    }
  } else {
    out.route = ExtensionRoute::leaders;
    const auto prof = coset_leader_profile(c);
    const SyndromeMap map(c);
    std::vector<std::uint32_t> syndromes;
    for (std::size_t s = 1; s < prof.leader_weight.size(); ++s) {
      if (prof.leader_weight[s] >= n / 2 - a) syndromes.push_back(static_cast<std::uint32_t>(s));
    }
    out.candidates = syndromes.size();
    auto candidate = [&](std::uint64_t i) { return map.lift(syndromes[static_cast<std::size_t>(i)]); };
    hits = kernels::filter_cosets_parallel(gens, syndromes.size(), candidate, allowed);
    for (auto i : hits) candidate_words.push_back(candidate(i));
  }

  for (Word x : candidate_words) {
    // The lexicographically least vector of the coset names it.
    Word best = x;
    for_each_codeword(c, [&](Word w) {
      if (lex_less(x ^ w, best)) best = x ^ w;
    });
    out.vectors.push_back(best);
  }
  for (Word x : out.vectors) out.codes.push_back(c.extended(x));
  return out;
}

ClassificationReport classify_step(std::vector<ClassRecord>& seeds, int a, const ClassifyOptions& opt) {
  ClassificationReport report;
  if (seeds.empty()) return report;
  report.n = seeds.front().code.length();
  report.k = seeds.front().code.dimension() + 1;

  struct Candidate {
    int parent;
    Word x;
    LinearCode code;
  };
  std::vector<Candidate> cands;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    auto ext = extensions(seeds[s].code, a);
    seeds[s].maximal = ext.codes.empty();
    for (std::size_t i = 0; i < ext.codes.size(); ++i) {
      cands.push_back({static_cast<int>(s), ext.vectors[i], std::move(ext.codes[i])});
    }
  }
  report.candidates = cands.size();

  // Distribution first: cheap and a necessary condition for equivalence.
  std::vector<WeightDistribution> dists(cands.size());
  std::vector<std::string> keys(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cands.size()); ++i) {
    const auto& cd = cands[static_cast<std::size_t>(i)].code;
    dists[static_cast<std::size_t>(i)] = weight_distribution(cd);
    keys[static_cast<std::size_t>(i)] = canonical_form(cd).key;
  }

  std::map<std::pair<std::vector<std::uint64_t>, std::string>, std::size_t> first;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    first.try_emplace({dists[i].counts, keys[i]}, i);
  }
  std::vector<std::size_t> reps;
  for (const auto& [k, i] : first) reps.push_back(i);
  std::sort(reps.begin(), reps.end(), [&](std::size_t x, std::size_t y) {
    return keys[x] != keys[y] ? keys[x] < keys[y] : dists[x].counts < dists[y].counts;
  });

  report.classes.resize(reps.size());
  const int redundancy = report.n - report.k;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(reps.size()); ++r) {
    const std::size_t i = reps[static_cast<std::size_t>(r)];
    auto& rec = report.classes[static_cast<std::size_t>(r)];
    rec.code = cands[i].code;
    rec.key = keys[i];
    rec.a = a;
    rec.distribution = dists[i];
    rec.min_weight = min_weight(rec.code);
    rec.parent = cands[i].parent;
    rec.extension = cands[i].x;
    if (opt.covering_radii && redundancy <= std::min(opt.max_radius_redundancy, kMaxRedundancy)) {
      rec.covering_radius = covering_radius(rec.code);
    }
  }
  return report;
}

std::vector<ClassificationReport> classify_offset(const LinearCode& base, int a, const ClassifyOptions& opt) {
  std::vector<ClassificationReport> layers;
  ClassRecord root;
  root.code = base;
  root.a = a;
  std::vector<ClassRecord> seeds{root};
  while (true) {
    auto next = classify_step(seeds, a, opt);
    if (!layers.empty()) layers.back().classes = seeds;
    if (next.classes.empty()) break;
    if (layers.empty()) {
      for (auto& rec : next.classes) rec.parent = -1;
    }
    layers.push_back(next);
    seeds = std::move(next.classes);
  }
  return layers;
}

double classification_cost_estimate(int n) {
  // Dominated by the first layer: 2^(n - 2(m+1)) dual cosets of RM(1,m),
  // each checked over 2^(m+1) words, then one canonical form per survivor.
  const int m = length_exponent(n);
  return std::ldexp(1.0, n - 2 * (m + 1)) * std::ldexp(1.0, m + 1) * n;
}

std::vector<ClassificationReport> classify_all(int n, bool allow_long, const ClassifyOptions& opt) {
  const int m = length_exponent(n);
  if (n > kMaxCanonicalLength) {
    throw CapacityError("classify: length " + std::to_string(n) + " exceeds the canonical-form limit 32");
  }
  if (n == 32 && !allow_long) {
    std::ostringstream msg;
    msg << "classify: length 32 needs --allow-long (about " << classification_cost_estimate(n)
        << " word operations in the first layer alone, then canonical forms for every surviving "
           "candidate; expect hours)";
    throw CapacityError(msg.str());
  }
  std::map<int, ClassificationReport> by_k;
  for (int a : admissible_offsets(n)) {
    for (auto& layer : classify_offset(reference_rm(m), a, opt)) {
      auto& dst = by_k[layer.k];
      if (dst.classes.empty() && dst.candidates == 0) {
        dst.n = layer.n;
        dst.k = layer.k;
      }
      dst.candidates += layer.candidates;
      for (auto& rec : layer.classes) dst.classes.push_back(std::move(rec));
    }
  }
  // Parent indices refer to the per-offset layer; remap them to the merged one.
  std::vector<ClassificationReport> out;
  std::map<int, std::map<std::pair<int, int>, int>> remap;  // k -> (a, old index) -> new index
  for (auto& [k, rep] : by_k) {
    std::map<int, int> counter;
    std::vector<std::pair<std::pair<int, int>, std::size_t>> tagged;
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
      tagged.push_back({{rep.classes[i].a, counter[rep.classes[i].a]++}, i});
    }
    std::vector<std::size_t> order(rep.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return rep.classes[x].key < rep.classes[y].key;
    });
    std::vector<ClassRecord> sorted;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      remap[k][tagged[order[pos]].first] = static_cast<int>(pos);
      sorted.push_back(std::move(rep.classes[order[pos]]));
    }
    for (auto& rec : sorted) {
      if (rec.parent >= 0 && remap.count(k - 1)) rec.parent = remap[k - 1].at({rec.a, rec.parent});
    }
    rep.classes = std::move(sorted);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace qc
