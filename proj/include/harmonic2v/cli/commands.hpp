#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "harmonic2v/simplicial.hpp"
#include "harmonic2v/verify.hpp"

namespace harmonic2v::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or pipeline failure
inline constexpr int kExitUsage = 2;    // bad flags or unparsable input

enum class Format { json, text };

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // document for stdout
  std::string error;   // message for stderr
};

struct DecomposeArgs {
  int m = 5;
  std::string poly;
  Strategy strategy = Strategy::direct;
  Format format = Format::json;
};

struct IntegrateArgs {
  int m = 5;
  std::string poly;
  std::string manifold = "stiefel2";  // or "sphere"
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t seed = 1;
  Format format = Format::json;
};

struct VerifyArgs {
  Suite suite = Suite::relations;
  SuiteOptions options;
  Format format = Format::json;
};

CommandResult cmd_decompose(const DecomposeArgs& args);
CommandResult cmd_integrate(const IntegrateArgs& args);
CommandResult cmd_verify(const VerifyArgs& args);

/// Full command-line front end ("decompose", "integrate", "verify");
/// `args` excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmonic2v::cli
