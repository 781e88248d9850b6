// bilateral: evaluate, verify and sweep bilateral hypergeometric identities.

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bilateral/commands.hpp"
#include "bilateral/errors.hpp"

namespace {

using namespace bilateral;

// Complex inputs come as two flags so no complex-literal parsing is needed.
struct ComplexFlag {
  std::optional<double> re;
  std::optional<double> im;
};

struct ParamFlags {
  std::map<std::string, ComplexFlag> values;
  std::optional<double> theta;
  std::optional<double> step;

  void attach(CLI::App* cmd) {
    for (const char* name : {"a", "b", "c", "d", "z", "x", "y", "n", "k"}) {
      ComplexFlag& f = values[name];
      cmd->add_option(std::string("--") + name + "-re", f.re, std::string("real part of ") + name);
      cmd->add_option(std::string("--") + name + "-im", f.im, std::string("imaginary part of ") + name + " (default 0)");
    }
    cmd->add_option("--theta", theta, "sets z = exp(i theta)");
    cmd->add_option("--step", step, "row step for binom_row_ratio");
  }

  ParamMap collect() const {
    ParamMap out;
    for (const auto& [name, f] : values) {
      if (f.re || f.im) out[name] = Complex(f.re.value_or(0.0), f.im.value_or(0.0));
    }
    if (theta) {
      if (out.contains("z")) throw UsageError("--theta and --z-re/--z-im are mutually exclusive");
      out["z"] = Complex(std::cos(*theta), std::sin(*theta));
    }
    if (step) out["step"] = Complex(*step, 0.0);
    return out;
  }
};

void attach_budget(CLI::App* cmd, SuiteConfig& config) {
  cmd->add_option("--rel-tol", config.rel_tol, "series relative tail tolerance")->capture_default_str();
  cmd->add_option("--max-half-width", config.max_half_width, "largest series truncation half-width")
      ->capture_default_str();
}

const std::map<std::string, OutputFormat> kFormats{{"jsonl", OutputFormat::jsonl}, {"csv", OutputFormat::csv}};
const std::map<std::string, Branch> kBranches{{"plus", Branch::plus}, {"minus", Branch::minus}};
const std::map<std::string, TargetKind> kKinds{{"closed", TargetKind::closed}, {"series", TargetKind::series}};

std::string target_list() {
  std::string s = "targets:\n";
  for (const Target& t : target_registry()) {
    s += "  " + t.name + " (" + (t.kind == TargetKind::series ? "series" : "closed") + "; ";
    for (std::size_t i = 0; i < t.params.size(); ++i) s += (i ? "," : "") + t.params[i];
    s += ")  " + t.description + "\n";
  }
  s += "identities:\n";
  for (const Identity& id : identity_registry()) s += "  " + id.id + "  " + id.description + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of bilateral hypergeometric identities"};
  app.footer(target_list());
  app.require_subcommand(1);

  EvalRequest eval;
  ParamFlags eval_params;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one target at one parameter point");
  eval_cmd->add_option("kind", eval.kind, "closed or series")
      ->required()
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
  eval_cmd->add_option("target", eval.target, "target name")->required();
  eval_cmd->add_option("--branch", eval.branch, "square-root branch for cf_duplication")
      ->transform(CLI::CheckedTransformer(kBranches, CLI::ignore_case));
  eval_params.attach(eval_cmd);
  attach_budget(eval_cmd, eval.config);

  SuiteConfig verify;
  OutputFormat verify_format = OutputFormat::jsonl;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity registry");
  attach_budget(verify_cmd, verify);
  verify_cmd->add_option("--samples", verify.sample_count, "points per identity")->capture_default_str();
  verify_cmd->add_option("--seed", verify.rng_seed, "sampling seed")->capture_default_str();
  verify_cmd->add_option("--identity", verify.identity_filter, "restrict to these identity ids (repeatable)");
  verify_cmd->add_option("--threads", verify.threads, "worker threads (0 = all cores)");
  verify_cmd->add_option("--format", verify_format, "jsonl or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  SweepRequest sweep;
  ParamFlags sweep_params;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "tabulate a target over a one-dimensional grid");
  sweep_cmd->add_option("target", sweep.target, "target name")->required();
  sweep_cmd->add_option("--var", sweep.var, "parameter to sweep (real part), or theta for z = exp(i theta)")
      ->required();
  sweep_cmd->add_option("--start", sweep.start, "first grid value")->required();
  sweep_cmd->add_option("--stop", sweep.stop, "last grid value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "number of grid points (at least 2)")->required();
  sweep_cmd->add_option("--branch", sweep.branch, "square-root branch for cf_duplication")
      ->transform(CLI::CheckedTransformer(kBranches, CLI::ignore_case));
  sweep_cmd->add_option("--format", sweep.format, "csv or jsonl")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  sweep_params.attach(sweep_cmd);
  attach_budget(sweep_cmd, sweep.config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ios::sync_with_stdio(false);
  try {
    if (*eval_cmd) {
      eval.params = eval_params.collect();
      return cmd_eval(eval, std::cout, std::cerr);
    }
    if (*verify_cmd) return cmd_verify(verify, verify_format, std::cout, std::cerr);
    sweep.fixed = sweep_params.collect();
    return cmd_sweep(sweep, std::cout, std::cerr);
  } catch (const std::exception& e) {
    return report_exception(e, std::cerr);
  }
}
