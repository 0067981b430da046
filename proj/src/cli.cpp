#include "qc/cli.hpp"

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qc/classify.hpp"
#include "qc/covering.hpp"
#include "qc/equivalence.hpp"
#include "qc/errors.hpp"
#include "qc/four_weight.hpp"
#include "qc/linear_code.hpp"
#include "qc/paper_data.hpp"
#include "qc/quwm.hpp"
#include "qc/reed_muller.hpp"

namespace qc::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

json code_json(const LinearCode& c) {
  json rows = json::array();
  for (const auto& r : c.basis()) rows.push_back(r.to_string());
  return {{"n", c.length()}, {"k", c.dimension()}, {"rows", rows}};
}

json distribution_json(const WeightDistribution& d) {
  json out = json::object();
  for (std::size_t w = 0; w < d.counts.size(); ++w) {
    if (d.counts[w]) out[std::to_string(w)] = d.counts[w];
  }
  return out;
}

json histogram_json(const std::vector<std::uint64_t>& h) {
  json out = json::object();
  for (std::size_t w = 0; w < h.size(); ++w) {
    if (h[w]) out[std::to_string(w)] = h[w];
  }
  return out;
}

json params_json(const QuwmParams& p) { return {{"n", p.n}, {"k", p.k}, {"l", p.l}, {"a", p.a}}; }

void emit(std::ostream& out, const CliConfig& cfg, json j, const std::string& text) {
  if (cfg.format == Format::json) {
    j["schema_version"] = kSchemaVersion;
    j["command"] = command_name(cfg.command);
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

const std::string& single_input(const CliConfig& cfg) {
  if (cfg.inputs.size() != 1) throw std::invalid_argument("expected exactly one code file");
  return cfg.inputs.front();
}

int cmd_rm(const CliConfig& cfg, std::ostream& out) {
  const auto c = build({cfg.m, cfg.fixed ? RmVariant::fixed : RmVariant::recursive});
  json j = code_json(c);
  j["m"] = cfg.m;
  j["variant"] = cfg.fixed ? "fixed" : "recursive";
  emit(out, cfg, j, format_code(c));
  return kExitPass;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
  const auto c = read_code_file(single_input(cfg));
  const auto r = check_conditions(c);
  json j;
  j["conditions"] = {{"c1", r.c1}, {"c2", r.c2}};
  j["weight_set"] = r.weight_set;
  j["distribution"] = distribution_json(r.observed);
  j["violations"] = r.violations;
  std::ostringstream text;
  if (r.ok()) {
    const auto& cert = *r.certificate;
    j["a"] = cert.a;
    j["l"] = cert.l;
    j["set_size"] = cert.set_size;
    j["expected_distribution"] = distribution_json(cert.expected);
    text << "conditions hold: n=" << cert.n << " k=" << cert.k << " a=" << cert.a << " l=" << cert.l
         << " set_size=" << cert.set_size << '\n';
  } else {
    j["a"] = nullptr;
    j["l"] = nullptr;
    j["set_size"] = nullptr;
    j["expected_distribution"] = nullptr;
    for (const auto& v : r.violations) text << v << '\n';
  }
  emit(out, cfg, j, text.str());
  return r.ok() ? kExitPass : kExitClaimFailure;
}

int cmd_wdist(const CliConfig& cfg, std::ostream& out) {
  const auto c = read_code_file(single_input(cfg));
  const auto d = weight_distribution(c);
  json j{{"n", c.length()}, {"k", c.dimension()}, {"distribution", distribution_json(d)}};
  std::ostringstream text;
  for (std::size_t w = 0; w < d.counts.size(); ++w) {
    if (d.counts[w]) text << w << ' ' << d.counts[w] << '\n';
  }
  emit(out, cfg, j, text.str());
  return kExitPass;
}

int cmd_equiv(const CliConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2) throw std::invalid_argument("equiv expects two code files");
  const auto a = read_code_file(cfg.inputs[0]);
  const auto b = read_code_file(cfg.inputs[1]);
  const auto r = are_equivalent(a, b);
  json j{{"equivalent", r.equivalent}};
  std::ostringstream text;
  text << (r.equivalent ? "equivalent" : "inequivalent");
  if (r.witness) {
    std::vector<int> one_based;
    for (int v : *r.witness) one_based.push_back(v + 1);
    j["witness"] = one_based;
    text << "\nwitness:";
    for (int v : one_based) text << ' ' << v;
  } else {
    j["witness"] = nullptr;
  }
  text << '\n';
  emit(out, cfg, j, text.str());
  return r.equivalent ? kExitPass : kExitClaimFailure;
}

int cmd_covrad(const CliConfig& cfg, std::ostream& out) {
  const auto c = read_code_file(single_input(cfg));
  const auto p = coset_leader_profile(c);
  json j{{"radius", p.radius}, {"leader_weight_histogram", histogram_json(p.histogram)}};
  std::ostringstream text;
  text << "covering radius " << p.radius << '\n';
  for (std::size_t w = 0; w < p.histogram.size(); ++w) {
    if (p.histogram[w]) text << "  weight " << w << ": " << p.histogram[w] << " cosets\n";
  }
  emit(out, cfg, j, text.str());
  return kExitPass;
}

int cmd_maximal(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto c = read_code_file(single_input(cfg));
  const auto r = check_conditions(c);
  if (!r.ok()) {
    for (const auto& v : r.violations) err << v << '\n';
    return kExitClaimFailure;
  }
  const auto m = is_maximal(c, *r.certificate);
  json j{{"maximal", m.maximal}, {"path", to_string(m.path)}, {"covering_radius", m.covering_radius}};
  j["witness_extension"] = m.witness ? code_json(*m.witness) : json(nullptr);
  std::ostringstream text;
  text << (m.maximal ? "maximal" : "not maximal") << " (" << to_string(m.path)
       << " path, covering radius " << m.covering_radius << ")\n";
  if (m.witness) text << "extension:\n" << format_code(*m.witness);
  emit(out, cfg, j, text.str());
  return kExitPass;
}

int cmd_quwm(const CliConfig& cfg, std::ostream& out) {
  if (cfg.code_path.empty()) throw std::invalid_argument("quwm requires --code");
  if (cfg.out_dir.empty()) throw std::invalid_argument("quwm requires --out");
  const auto c = read_code_file(cfg.code_path);
  const auto cond = check_conditions(c);
  if (!cond.ok()) {
    std::string msg = "code fails the conditions:";
    for (const auto& v : cond.violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }
  const auto set = build_quwm_set(c, cfg.seed);
  const auto ver = verify_set(set);
  std::filesystem::create_directories(cfg.out_dir);
  for (std::size_t i = 0; i < set.matrices.size(); ++i) {
    std::ofstream f(std::filesystem::path(cfg.out_dir) / ("H_" + std::to_string(i + 1) + ".txt"));
    f << format_matrix(set.matrices[i]);
  }
  json reps = json::array();
  for (const auto& u : set.coset_representatives) reps.push_back(u.to_string());
  json j{{"params", params_json(set.params)},
         {"matrices", set.matrices.size()},
         {"all_hadamard", ver.all_hadamard},
         {"pair_checks", ver.all_pairs},
         {"pairs_checked", ver.pairs_checked},
         {"zero_count_per_row", std::vector<int>(ver.zero_counts.begin(), ver.zero_counts.end())},
         {"failures", ver.failures},
         {"coset_representatives", reps}};
  j["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
  j["schema_version"] = kSchemaVersion;
  j["command"] = "quwm";
  {
    std::ofstream f(std::filesystem::path(cfg.out_dir) / "report.json");
    f << j.dump(2) << '\n';
  }
  std::ostringstream text;
  text << set.matrices.size() << " Hadamard matrices of order " << set.params.n << ", params ("
       << set.params.n << "," << set.params.k << "," << set.params.l << "," << set.params.a << "), "
       << ver.pairs_checked << " pairs " << (ver.ok() ? "verified" : "FAILED") << '\n';
  for (const auto& f : ver.failures) text << "  " << f << '\n';
  emit(out, cfg, j, text.str());
  return ver.ok() ? kExitPass : kExitClaimFailure;
}

int cmd_classify(const CliConfig& cfg, std::ostream& out) {
  if (cfg.length <= 0) throw std::invalid_argument("classify requires --length");
  const auto reports = classify_all(cfg.length, cfg.allow_long);
  json layers = json::array();
  std::ostringstream text;
  if (!cfg.out_dir.empty()) std::filesystem::create_directories(cfg.out_dir);
  for (const auto& rep : reports) {
    json classes = json::array();
    std::size_t maximal = 0;
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
      const auto& c = rep.classes[i];
      maximal += c.maximal;
      json cj{{"index", i + 1},
              {"a", c.a},
              {"min_weight", c.min_weight},
              {"maximal", c.maximal},
              {"distribution", distribution_json(c.distribution)},
              {"key", key_hex(c.key)},
              {"parent", c.parent < 0 ? json(nullptr) : json(c.parent + 1)},
              {"extension", BitVector(rep.n, c.extension).to_string()},
              {"code", code_json(c.code)}};
      cj["covering_radius"] = c.covering_radius ? json(*c.covering_radius) : json(nullptr);
      classes.push_back(cj);
      if (!cfg.out_dir.empty()) {
        std::ofstream f(std::filesystem::path(cfg.out_dir) /
                        ("n" + std::to_string(rep.n) + "_k" + std::to_string(rep.k) + "_" +
                         std::to_string(i + 1) + ".code"));
        write_code(f, c.code);
      }
    }
    layers.push_back({{"n", rep.n},
                      {"k", rep.k},
                      {"candidates", rep.candidates},
                      {"class_count", rep.classes.size()},
                      {"maximal_count", maximal},
                      {"classes", classes}});
    text << "[" << rep.n << "," << rep.k << "]: " << rep.classes.size() << " classes (" << maximal
         << " maximal) from " << rep.candidates << " candidates\n";
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
      const auto& c = rep.classes[i];
      text << "  #" << i + 1 << " d=" << c.min_weight << " a=" << c.a
           << (c.maximal ? " maximal" : "") << " rho=";
      if (c.covering_radius) {
        text << *c.covering_radius;
      } else {
        text << '-';
      }
      text << '\n';
    }
  }
  json j{{"length", cfg.length}, {"layers", layers}};
  if (!cfg.out_dir.empty()) {
    json file = j;
    file["schema_version"] = kSchemaVersion;
    file["command"] = "classify";
    std::ofstream f(std::filesystem::path(cfg.out_dir) / "report.json");
    f << file.dump(2) << '\n';
  }
  emit(out, cfg, j, text.str());
  return kExitPass;
}

int cmd_verify_paper(const CliConfig& cfg, std::ostream& out) {
  const auto r = verify_paper(cfg.scope);
  json claims = json::array();
  std::ostringstream text;
  for (const auto& c : r.claims) {
    claims.push_back({{"subject", c.subject},
                      {"claim", c.name},
                      {"pass", c.pass},
                      {"expected", c.expected},
                      {"observed", c.observed}});
    if (!c.pass) {
      text << "FAIL " << c.subject << " " << c.name << ": expected " << c.expected << ", observed "
           << c.observed << '\n';
    }
  }
  text << r.codes << " codes, " << r.claims.size() << " claims, " << r.failures() << " failures\n";
  json j{{"scope", r.scope == 0 ? json("all") : json(r.scope)},
         {"codes", r.codes},
         {"claims", claims},
         {"failures", r.failures()},
         {"ok", r.ok()}};
  emit(out, cfg, j, text.str());
  return r.ok() ? kExitPass : kExitClaimFailure;
}

int cmd_dump(const CliConfig& cfg, std::ostream& out) {
  if (cfg.id.empty()) throw std::invalid_argument("dump requires --id");
  const auto c = load_code(cfg.id);
  json j = code_json(c);
  j["id"] = named_code(cfg.id).id;
  emit(out, cfg, j, format_code(c));
  return kExitPass;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::rm: return cmd_rm(cfg, out);
    case Command::check: return cmd_check(cfg, out);
    case Command::wdist: return cmd_wdist(cfg, out);
    case Command::equiv: return cmd_equiv(cfg, out);
    case Command::covrad: return cmd_covrad(cfg, out);
    case Command::maximal: return cmd_maximal(cfg, out, err);
    case Command::quwm: return cmd_quwm(cfg, out);
    case Command::classify: return cmd_classify(cfg, out);
    case Command::verify_paper: return cmd_verify_paper(cfg, out);
    case Command::dump: return cmd_dump(cfg, out);
  }
  return kExitInputError;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::rm, Command::check, Command::wdist, Command::equiv, Command::covrad,
                    Command::maximal, Command::quwm, Command::classify, Command::verify_paper,
                    Command::dump}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::rm: return "rm";
    case Command::check: return "check";
    case Command::wdist: return "wdist";
    case Command::equiv: return "equiv";
    case Command::covrad: return "covrad";
    case Command::maximal: return "maximal";
    case Command::quwm: return "quwm";
    case Command::classify: return "classify";
    case Command::verify_paper: return "verify-paper";
    case Command::dump: return "dump";
  }
  return "?";
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.threads > 0) omp_set_num_threads(config.threads);
  try {
    return dispatch(config, out, err);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UnknownIdError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const IntegrityError& e) {
    err << "integrity: " << e.what() << '\n';
    return kExitClaimFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace qc::cli
