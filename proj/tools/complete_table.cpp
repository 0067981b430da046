// Derives the generators that the registry marks as computed:
//   c_{8,k,1}   extension vectors along the length-8 classification chain;
//   c_{32,10,i} the generator completing each [32,10] code from its listed
//               9-dimensional part.
// Prints "computed" fixture records on stdout, diagnostics on stderr.
// With --check, compares against the computed vectors already in the fixture
// and exits 1 on any difference.

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qc/classify.hpp"
#include "qc/equivalence.hpp"
#include "qc/four_weight.hpp"
#include "qc/paper_data.hpp"

namespace {

using namespace qc;

std::string record(const std::string& id, int n, Word w) {
  std::string s = "computed " + id + " " + std::to_string(n);
  for (int p : BitVector(n, w).support()) s += " " + std::to_string(p);
  return s;
}

struct Partial {
  int index = 0;
  std::string id;
  LinearCode code;  // the listed 9-dimensional part
};

std::vector<Partial> partial_codes() {
  std::vector<Partial> out;
  for (const auto& c : fixture().codes) {
    int index = 0;
    if (std::sscanf(c.id.c_str(), "D_{32,10,%d}", &index) == 1) {
      out.push_back({index, c.id, build_code(c)});
    } else if (std::sscanf(c.id.c_str(), "C_{32,10,%d}", &index) == 1) {
      NamedCode head = c;
      head.generators.pop_back();
      head.k -= 1;
      out.push_back({index, c.id, reference_rm(5)});
      for (const auto& g : head.generators) out.back().code = out.back().code.extended(named_vector(g).vector());
    }
  }
  std::sort(out.begin(), out.end(), [](const Partial& a, const Partial& b) { return a.index < b.index; });
  return out;
}

// Kuhn's augmenting paths; ids in order, keys in ascending order.
bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<int>& owner,
             std::vector<char>& seen) {
  for (std::size_t v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (owner[v] < 0 || augment(static_cast<std::size_t>(owner[v]), adj, owner, seen)) {
      owner[v] = static_cast<int>(u);
      return true;
    }
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  const bool check = argc > 1 && std::strcmp(argv[1], "--check") == 0;
  std::vector<std::string> lines;

  // Length 8: follow the classification representatives.
  const auto layers = classify_all(8, false);
  for (const auto& layer : layers) {
    if (layer.classes.size() != 1) {
      std::cerr << "length 8, k=" << layer.k << ": " << layer.classes.size() << " classes\n";
      return 1;
    }
    lines.push_back(record("c_{8," + std::to_string(layer.k) + ",1}", 8, layer.classes[0].extension));
  }

  // Length 32, k = 10.
  const auto parts = partial_codes();
  std::map<std::string, std::size_t> key_index;
  std::vector<std::string> keys;
  std::vector<std::vector<std::size_t>> adj(parts.size());
  std::vector<std::map<std::size_t, Word>> first_vector(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto cond = check_conditions(parts[p].code);
    if (!cond.ok()) {
      std::cerr << parts[p].id << ": listed part fails the conditions\n";
      return 1;
    }
    const auto ext = extensions(parts[p].code, cond.certificate->a);
    std::vector<std::string> ext_keys(ext.codes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ext.codes.size()); ++i) {
      ext_keys[static_cast<std::size_t>(i)] = canonical_form(ext.codes[static_cast<std::size_t>(i)]).key;
    }
    std::set<std::size_t> classes;
    for (std::size_t i = 0; i < ext.codes.size(); ++i) {
      auto [it, inserted] = key_index.try_emplace(ext_keys[i], keys.size());
      if (inserted) keys.push_back(ext_keys[i]);
      classes.insert(it->second);
      first_vector[p].try_emplace(it->second, ext.vectors[i]);
    }
    std::cerr << parts[p].id << ": " << ext.codes.size() << " extensions, " << classes.size()
              << " classes\n";
  }
  // Renumber keys in ascending order so the matching is independent of discovery order.
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> rank(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& [k, w] : first_vector[p]) adj[p].push_back(rank[k]);
    std::sort(adj[p].begin(), adj[p].end());
  }
  std::cerr << "total classes over all parts: " << keys.size() << "\n";
  if (std::getenv("QC_DUMP_ADJ")) {
    for (std::size_t p = 0; p < parts.size(); ++p) {
      std::cerr << "adj";
      for (auto v : adj[p]) std::cerr << " " << v;
      std::cerr << "\n";
    }
  }

  std::vector<int> owner(keys.size(), -1);
  std::size_t matched = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<char> seen(keys.size(), 0);
    if (augment(p, adj, owner, seen)) {
      ++matched;
    } else {
      std::cerr << parts[p].id << ": no distinct class left\n";
    }
  }
  std::cerr << "matched " << matched << " of " << parts.size() << "\n";
  std::vector<std::optional<std::size_t>> assigned(parts.size());
  for (std::size_t r = 0; r < owner.size(); ++r) {
    if (owner[r] >= 0) assigned[static_cast<std::size_t>(owner[r])] = order[r];
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!assigned[p]) continue;
    lines.push_back(record("c_{32,10," + std::to_string(parts[p].index) + "}", 32,
                           first_vector[p].at(*assigned[p])));
  }

  int status = matched == parts.size() ? 0 : 1;
  if (check) {
    std::set<std::string> existing;
    for (const auto& v : fixture().vectors) {
      if (!v.computed) continue;
      std::string s = "computed " + v.id + " " + std::to_string(v.n);
      for (int p : v.support) s += " " + std::to_string(p);
      existing.insert(s);
    }
    const std::set<std::string> fresh(lines.begin(), lines.end());
    if (fresh != existing) {
      std::cerr << "computed vectors differ from the fixture\n";
      status = 1;
    } else {
      std::cerr << "fixture computed vectors reproduced\n";
    }
  }
  for (const auto& l : lines) std::cout << l << '\n';
  return status;
}
