#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qc/cli.hpp"

int main(int argc, char** argv) {
  using namespace qc::cli;
  CLI::App app{"Four-weight binary codes and quasi-unbiased weighing matrices"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "text";
  std::string scope = "all";
  std::string variant = "recursive";
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--threads", cfg.threads, "Worker thread cap (0: runtime default)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* rm = app.add_subcommand("rm", "Print RM(1,m)");
  rm->add_option("--m", cfg.m, "Order m")->required();
  rm->add_option("--variant", variant, "recursive or fixed")->check(CLI::IsMember({"recursive", "fixed"}));

  auto* check = app.add_subcommand("check", "Test the four-weight conditions");
  auto* wdist = app.add_subcommand("wdist", "Weight distribution");
  auto* covrad = app.add_subcommand("covrad", "Covering radius and coset leader histogram");
  auto* maximal = app.add_subcommand("maximal", "Maximality among condition-satisfying codes");
  for (auto* sub : {check, wdist, covrad, maximal}) {
    sub->add_option("file", cfg.inputs, "Code file")->required()->expected(1);
  }
  auto* equiv = app.add_subcommand("equiv", "Permutation equivalence of two codes");
  equiv->add_option("files", cfg.inputs, "Two code files")->required()->expected(2);

  auto* quwm = app.add_subcommand("quwm", "Build and verify the quasi-unbiased Hadamard set");
  quwm->add_option("--code", cfg.code_path, "Code file")->required();
  quwm->add_option("--out", cfg.out_dir, "Output directory")->required();
  auto* seed_opt = quwm->add_option("--seed", seed, "Randomize the antipodal halves with this seed");

  auto* classify = app.add_subcommand("classify", "Classify codes of a given length");
  classify->add_option("--length", cfg.length, "Length 8, 16 or 32")->required();
  classify->add_flag("--allow-long", cfg.allow_long, "Permit the length 32 run");
  classify->add_option("--out", cfg.out_dir, "Directory for representatives and report.json");

  auto* verify = app.add_subcommand("verify-paper", "Recheck every claim about the named codes");
  verify->add_option("--scope", scope, "8, 16, 32 or all")->check(CLI::IsMember({"8", "16", "32", "all"}));

  auto* dump = app.add_subcommand("dump", "Print a named code");
  dump->add_option("--id", cfg.id, "Code id, e.g. C_{16,6,1} or C_16_6_1")->required();

  for (auto* sub : {rm, check, wdist, covrad, maximal, equiv, quwm, classify, verify, dump}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  cfg.command = *parse_command(app.get_subcommands().front()->get_name());
  cfg.format = format == "json" ? Format::json : Format::text;
  cfg.fixed = variant == "fixed";
  cfg.scope = scope == "all" ? 0 : std::stoi(scope);
  if (seed_opt->count() > 0) cfg.seed = seed;
  return run(cfg, std::cout, std::cerr);
}
