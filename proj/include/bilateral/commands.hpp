#pragma once

// The three CLI subcommands as plain functions over streams, so tests can
// drive them without spawning processes. Each returns the process exit code:
// 0 success, 1 verification failure, 2 usage/precondition, 3 math domain.

#include <iosfwd>
#include <string>

#include "bilateral/harness.hpp"

namespace bilateral {

enum class OutputFormat { jsonl, csv };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitMathDomain = 3,
};

/// Maps an exception to its exit code and writes a one-line diagnostic to err.
int report_exception(const std::exception& e, std::ostream& err);

struct EvalRequest {
  TargetKind kind = TargetKind::closed;
  std::string target;
  ParamMap params;
  Branch branch = Branch::plus;
  SuiteConfig config;
};

int cmd_eval(const EvalRequest& request, std::ostream& out, std::ostream& err);

int cmd_verify(const SuiteConfig& config, OutputFormat format, std::ostream& out, std::ostream& err);

struct SweepRequest {
  std::string target;
  /// Parameter name, or "theta" for z = e^{i theta}.
  std::string var;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  ParamMap fixed;
  Branch branch = Branch::plus;
  SuiteConfig config;
  OutputFormat format = OutputFormat::csv;
};

int cmd_sweep(const SweepRequest& request, std::ostream& out, std::ostream& err);

}  // namespace bilateral
