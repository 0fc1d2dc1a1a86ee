#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigroi/pipeline.hpp"
#include "sigroi/radon.hpp"

namespace sigroi::cli {

enum class Subcommand { Process, Corpus, Bench, Generate };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CliInvocation {
  Subcommand command = Subcommand::Process;
  std::optional<std::filesystem::path> input;
  std::filesystem::path output = "out";
  std::optional<std::filesystem::path> config;
  PipelineConfig pipeline;
  bool emit_stages = false;
  std::uint64_t seed = 0;
  std::optional<std::size_t> count;
  std::size_t repeats = kDefaultRepeats;
  std::size_t workers = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for --help; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses arguments after the program name. Values come from flags, then the
/// --config file (flat key=value, '#' comments, keys named like the long
/// flags), then defaults. Throws UsageError on bad input.
CliInvocation parse_args(std::span<const std::string> args);

/// Default --count per subcommand: process has none, corpus requires --in or
/// --count, generate writes 1 image, bench samples 5 signatures.
std::size_t default_count(Subcommand command);

/// Executes a parsed invocation; returns kExitOk or kExitFailure.
int run(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// Timing rows for the bench subcommand: rgb, gray, binary, binary_packed and
/// the four edge operators on signature `seed`, then an original/cropped pair
/// for each of `count` signatures.
std::vector<BenchmarkRow> bench_rows(std::uint64_t seed, std::size_t count, std::size_t repeats,
                                     std::span<const double> angles);

/// Full entry point: parse, run, map errors to exit codes {0, 1, 2}.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigroi::cli
