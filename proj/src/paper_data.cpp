#include "qc/paper_data.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qc/classify.hpp"
#include "qc/covering.hpp"
#include "qc/equivalence.hpp"
#include "qc/errors.hpp"
#include "qc/four_weight.hpp"
#include "qc/quwm.hpp"

namespace qc {

namespace detail {
extern const std::string_view kNamedCodesFixture;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Fixture parse_fixture(std::string_view text) {
  Fixture f;
  std::map<std::string, std::size_t, std::less<>> vec_index;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  bool have_checksum = false;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string line(text.substr(pos, eol - pos));
    const std::size_t line_start = pos;
    pos = eol + 1;
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (have_checksum) throw ParseError("content after checksum", lineno);
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "vector" || tag == "computed") {
      NamedVector v;
      v.computed = tag == "computed";
      if (!(in >> v.id >> v.n)) throw ParseError("expected '<id> <n>'", lineno);
      int p = 0;
      while (in >> p) v.support.push_back(p);
      if (!in.eof()) throw ParseError("bad support entry", lineno);
      try {
        (void)v.vector();
      } catch (const std::exception& e) {
        throw ParseError(v.id + ": " + e.what(), lineno);
      }
      if (!vec_index.emplace(v.id, f.vectors.size()).second) {
        throw ParseError("duplicate vector id " + v.id, lineno);
      }
      f.vectors.push_back(std::move(v));
    } else if (tag == "code") {
      NamedCode c;
      if (!(in >> c.id >> c.n >> c.k >> c.d)) throw ParseError("expected '<id> <n> <k> <d>'", lineno);
      std::string g;
      while (in >> g) {
        const auto it = vec_index.find(g);
        if (it == vec_index.end()) throw IntegrityError(c.id + " names undefined vector " + g);
        if (f.vectors[it->second].n != c.n) throw IntegrityError(c.id + ": length of " + g + " differs");
        c.generators.push_back(g);
      }
      f.codes.push_back(std::move(c));
    } else if (tag == "checksum") {
      std::string hex;
      if (!(in >> hex)) throw ParseError("checksum value missing", lineno);
      try {
        f.checksum = std::stoull(hex, nullptr, 16);
      } catch (const std::exception&) {
        throw ParseError("bad checksum value", lineno);
      }
      const std::uint64_t actual = fnv1a64(text.substr(0, line_start));
      if (actual != f.checksum) {
        std::ostringstream msg;
        msg << "fixture checksum mismatch: stored " << hex << ", computed " << std::hex << actual;
        throw IntegrityError(msg.str());
      }
      have_checksum = true;
    } else {
      throw ParseError("unknown record '" + tag + "'", lineno);
    }
  }
  if (!have_checksum) throw IntegrityError("fixture has no checksum line");
  return f;
}

std::string_view fixture_text() { return detail::kNamedCodesFixture; }

const Fixture& fixture() {
  static const Fixture f = parse_fixture(fixture_text());
  return f;
}

std::string normalize_id(std::string_view id) {
  std::string s(id);
  if (s.find('{') != std::string::npos) return s;
  const auto us = s.find('_');
  if (us == std::string::npos) return s;
  std::string out = s.substr(0, us + 1) + "{";
  for (std::size_t i = us + 1; i < s.size(); ++i) out.push_back(s[i] == '_' ? ',' : s[i]);
  return out + "}";
}

const NamedVector& named_vector(std::string_view id) {
  const std::string key = normalize_id(id);
  for (const auto& v : fixture().vectors) {
    if (v.id == key) return v;
  }
  throw UnknownIdError("unknown vector id " + std::string(id));
}

const NamedCode& named_code(std::string_view id) {
  const std::string key = normalize_id(id);
  for (const auto& c : fixture().codes) {
    if (c.id == key) return c;
  }
  throw UnknownIdError("unknown code id " + std::string(id));
}

std::vector<std::string> code_ids(int n) {
  std::vector<std::string> out;
  for (const auto& c : fixture().codes) {
    if (n == 0 || c.n == n) out.push_back(c.id);
  }
  return out;
}

LinearCode build_code(const NamedCode& c) {
  LinearCode code = reference_rm(length_exponent(c.n));
  for (const auto& g : c.generators) {
    const auto next = code.extended(named_vector(g).vector());
    if (next.dimension() != code.dimension() + 1) {
      throw IntegrityError(c.id + ": generator " + g + " lies in the span of the previous ones");
    }
    code = next;
  }
  if (code.dimension() != c.k) {
    throw IntegrityError(c.id + ": dimension " + std::to_string(code.dimension()) + ", expected " +
                         std::to_string(c.k));
  }
  const int d = min_weight(code);
  if (d != c.d) {
    throw IntegrityError(c.id + ": minimum weight " + std::to_string(d) + ", expected " +
                         std::to_string(c.d));
  }
  return code;
}

LinearCode load_code(std::string_view id) { return build_code(named_code(id)); }

bool PaperReport::ok() const { return failures() == 0; }

std::uint64_t PaperReport::failures() const {
  return static_cast<std::uint64_t>(
      std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.pass; }));
}

namespace {

struct Index {
  int n = 0;
  int k = 0;
  int i = 0;
};

// "C_{32,10,7}" -> {32, 10, 7}; "C_{8,5}" -> {8, 5, 0}.
Index parse_index(const std::string& id) {
  Index out;
  const auto open = id.find('{');
  std::istringstream in(id.substr(open + 1));
  char sep = 0;
  in >> out.n >> sep >> out.k;
  if (in >> sep && sep == ',') in >> out.i;
  return out;
}

std::string dist_string(const WeightDistribution& d) {
  std::ostringstream s;
  s << "(";
  bool first = true;
  for (std::size_t w = 0; w < d.counts.size(); ++w) {
    if (!d.counts[w]) continue;
    s << (first ? "" : ",") << "A" << w << "=" << d.counts[w];
    first = false;
  }
  s << ")";
  return s.str();
}

struct QuwmClaim {
  std::uint64_t min_size;
  bool exact;
  QuwmParams params;
};

std::optional<QuwmClaim> quwm_claim(const std::string& id) {
  if (id == "C_{8,5}") return QuwmClaim{2, true, {8, 8, 4, 16}};
  if (id == "C_{16,8,1}") return QuwmClaim{8, true, {16, 16, 4, 64}};
  if (id == "C_{32,9,1}") return QuwmClaim{8, true, {32, 32, 16, 64}};
  if (id == "C_{32,10,102}") return QuwmClaim{4, false, {32, 32, 4, 256}};
  return std::nullopt;
}

// Expected covering radius: exact value, upper bound, or none.
struct RadiusClaim {
  int value;
  bool upper_bound;
};

std::optional<RadiusClaim> radius_claim(const Index& x) {
  if (x.n == 16 && x.k == 7 && x.i == 1) return RadiusClaim{4, false};
  if (x.n == 32 && x.k == 10 && x.i <= 101) return RadiusClaim{10, false};
  if (x.n == 32 && x.k == 11) return RadiusClaim{8, false};
  if (x.n == 32 && x.k == 9 && x.i <= 90) return RadiusClaim{11, true};
  return std::nullopt;
}

// true: maximal, false: extends, nullopt: no claim.
std::optional<bool> maximal_claim(const Index& x) {
  if (x.n == 32) return true;
  if (x.n == 16) {
    if (x.k == 6) return false;
    if (x.k == 7) return x.i == 1;
    return true;
  }
  if (x.n == 8) return x.k == 7;
  return std::nullopt;
}

struct CodeResult {
  std::vector<Claim> claims;
  std::string key;
  std::optional<LinearCode> code;
};

CodeResult check_code(const NamedCode& nc) {
  CodeResult r;
  auto add = [&](std::string name, bool pass, std::string expected, std::string observed) {
    r.claims.push_back({nc.id, std::move(name), pass, std::move(expected), std::move(observed)});
  };
  const Index x = parse_index(nc.id);
  LinearCode code;
  try {
    code = build_code(nc);
  } catch (const IntegrityError& e) {
    add("reconstruction", false, "[" + std::to_string(nc.n) + "," + std::to_string(nc.k) + "," +
                                     std::to_string(nc.d) + "]", e.what());
    return r;
  }
  r.code = code;
  add("reconstruction", true,
      "[" + std::to_string(nc.n) + "," + std::to_string(nc.k) + "," + std::to_string(nc.d) + "]",
      "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "," +
          std::to_string(min_weight(code)) + "]");

  const auto cond = check_conditions(code);
  std::string cond_obs = std::string("c1=") + (cond.c1 ? "true" : "false") + " c2=" + (cond.c2 ? "true" : "false");
  add("conditions", cond.ok(), "c1=true c2=true", cond_obs);
  if (!cond.ok()) return r;
  const auto& cert = *cond.certificate;
  add("offset", cert.a == nc.n / 2 - nc.d, std::to_string(nc.n / 2 - nc.d), std::to_string(cert.a));
  add("distribution", cert.expected == cond.observed, dist_string(cert.expected), dist_string(cond.observed));

  const auto div = divisibility(code);
  if (nc.id == "C_{32,9,92}" || nc.id == "C_{32,10,102}") {
    add("triply_even", div == Divisibility::triply_even, "triply_even", to_string(div));
  }
  if (x.n == 16 && x.k == 8) {
    const bool sd = dual(code) == code;
    add("doubly_even_self_dual", sd && div != Divisibility::none, "doubly_even self-dual",
        to_string(div) + (sd ? " self-dual" : " not self-dual"));
  }

  const auto mc = maximal_claim(x);
  const auto rc = radius_claim(x);
  if (mc || rc) {
    const auto m = is_maximal(code, cert);
    if (rc) {
      const bool pass = rc->upper_bound ? m.covering_radius <= rc->value : m.covering_radius == rc->value;
      add("covering_radius", pass, (rc->upper_bound ? "<= " : "") + std::to_string(rc->value),
          std::to_string(m.covering_radius));
    } else {
      add("covering_radius", true, "not stated", std::to_string(m.covering_radius));
    }
    if (mc) {
      std::string obs = m.maximal ? "maximal" : "extends";
      obs += " (" + to_string(m.path) + " path)";
      bool pass = m.maximal == *mc;
      if (!m.maximal) {
        const bool witness_ok = m.witness && check_conditions(*m.witness).ok() && contains(*m.witness, code);
        pass = pass && witness_ok;
        obs += witness_ok ? ", witness verified" : ", witness invalid";
      }
      add("maximal", pass, *mc ? "maximal" : "extends", obs);
    }
  }

  if (const auto qc = quwm_claim(nc.id)) {
    const auto set = build_quwm_set(code);
    const auto ver = verify_set(set);
    const bool size_ok = qc->exact ? set.matrices.size() == qc->min_size : set.matrices.size() >= qc->min_size;
    const bool params_ok = set.params == qc->params;
    std::ostringstream exp, obs;
    exp << (qc->exact ? "" : ">= ") << qc->min_size << " matrices, (" << qc->params.n << "," << qc->params.k
        << "," << qc->params.l << "," << qc->params.a << ")";
    obs << set.matrices.size() << " matrices, (" << set.params.n << "," << set.params.k << "," << set.params.l
        << "," << set.params.a << "), " << ver.pairs_checked << " pairs "
        << (ver.ok() ? "verified" : "FAILED");
    add("quwm", size_ok && params_ok && ver.ok(), exp.str(), obs.str());
  }

  r.key = canonical_form(code).key;
  return r;
}

void classification_claims(int n, const std::vector<const NamedCode*>& named,
                           const std::vector<CodeResult>& results, std::vector<Claim>& out) {
  const auto reports = classify_all(n, false);
  std::set<int> dims;
  for (const auto& rep : reports) dims.insert(rep.k);
  std::set<int> named_dims;
  for (const auto* c : named) named_dims.insert(c->k);
  auto join = [](const std::set<int>& s) {
    std::string o = "{";
    for (int v : s) o += (o.size() > 1 ? "," : "") + std::to_string(v);
    return o + "}";
  };
  const std::string fam = "length " + std::to_string(n);
  out.push_back({fam, "classified_dimensions", dims == named_dims, join(named_dims), join(dims)});
  for (const auto& rep : reports) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < named.size(); ++i) {
      if (named[i]->k == rep.k) members.push_back(i);
    }
    std::set<std::string> class_keys;
    for (const auto& c : rep.classes) class_keys.insert(c.key);
    std::set<std::string> named_keys;
    for (auto i : members) named_keys.insert(results[i].key);
    const std::string subject = "[" + std::to_string(n) + "," + std::to_string(rep.k) + "]";
    out.push_back({subject, "class_count", rep.classes.size() == members.size(),
                   std::to_string(members.size()), std::to_string(rep.classes.size())});
    out.push_back({subject, "named_codes_match_classes", named_keys == class_keys,
                   "every class represented", named_keys == class_keys ? "all matched" : "mismatch"});
  }
}

}  // namespace

PaperReport verify_paper(int scope, const VerifyOptions& opt) {
  if (scope != 0 && scope != 8 && scope != 16 && scope != 32) {
    throw std::invalid_argument("scope must be 8, 16, 32 or all");
  }
  PaperReport report;
  report.scope = scope;
  std::vector<const NamedCode*> named;
  for (const auto& c : fixture().codes) {
    if (scope == 0 || c.n == scope) named.push_back(&c);
  }
  report.codes = named.size();

  std::vector<CodeResult> results(named.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(named.size()); ++i) {
    results[static_cast<std::size_t>(i)] = check_code(*named[static_cast<std::size_t>(i)]);
  }
  for (auto& r : results) {
    for (auto& c : r.claims) report.claims.push_back(std::move(c));
  }

  // Pairwise inequivalence within each (n,k) family.
  std::map<std::pair<int, int>, std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < named.size(); ++i) families[{named[i]->n, named[i]->k}].push_back(i);
  for (const auto& [nk, members] : families) {
    std::set<std::string> keys;
    std::size_t built = 0;
    for (auto i : members) {
      if (results[i].key.empty()) continue;
      ++built;
      keys.insert(results[i].key);
    }
    const std::string subject = "[" + std::to_string(nk.first) + "," + std::to_string(nk.second) + "]";
    report.claims.push_back({subject, "pairwise_inequivalent", built == members.size() && keys.size() == members.size(),
                             std::to_string(members.size()) + " classes", std::to_string(keys.size()) + " classes"});
  }

  if (opt.classification) {
    for (int n : {8, 16}) {
      if (scope != 0 && scope != n) continue;
      std::vector<const NamedCode*> sub;
      std::vector<CodeResult> sub_results;
      for (std::size_t i = 0; i < named.size(); ++i) {
        if (named[i]->n == n) {
          sub.push_back(named[i]);
          sub_results.push_back(results[i]);
        }
      }
      classification_claims(n, sub, sub_results, report.claims);
    }
  }
  return report;
}

}  // namespace qc
