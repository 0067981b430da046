#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qc::cli {

enum class Command { rm, check, wdist, equiv, covrad, maximal, quwm, classify, verify_paper, dump };
enum class Format { text, json };

// Exit status contract.
inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacity = 3;

struct CliConfig {
  Command command = Command::check;
  std::vector<std::string> inputs;  // positional code files
  std::string code_path;            // quwm --code
  std::string out_dir;              // quwm, classify
  std::string id;                   // dump
  int m = 0;                        // rm
  bool fixed = false;               // rm --variant fixed
  int length = 0;                   // classify
  bool allow_long = false;
  int scope = 0;                    // verify-paper, 0 = all
  Format format = Format::text;
  std::optional<std::uint64_t> seed;
  int threads = 0;                  // 0 = runtime default
};

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

// Dispatches one command. Never throws: errors are mapped to exit codes and
// reported on `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qc::cli
