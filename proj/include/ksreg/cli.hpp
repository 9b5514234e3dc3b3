#pragma once

// Command-line front end: verify | orbit | bench | table.
// Exit codes: 0 pass, 1 identity failure, 2 usage error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ksreg {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string subcommand;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  long samples = 1000;
  double t_max = 0.0;  // 0: the subcommand's default
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with argv-style arguments (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  bool pass = false;
};

/// The identity suites behind `verify`, at the given tolerance on the float path.
std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, long samples, double tolerance);

}  // namespace ksreg
