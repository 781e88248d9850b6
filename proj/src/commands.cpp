#include "bilateral/commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bilateral/errors.hpp"

namespace bilateral {

namespace {

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const MathDomainError*>(&e)) return kExitMathDomain;
  if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const UsageError*>(&e)) return kExitUsage;
  // Anything else (std::out_of_range, bad_alloc, ...) is an internal failure;
  // treat it as a domain error so it is never mistaken for success.
  return kExitMathDomain;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const DivergenceError*>(&e)) return "DivergenceError";
  if (dynamic_cast<const LimitDivergesError*>(&e)) return "LimitDivergesError";
  if (dynamic_cast<const BranchCutError*>(&e)) return "BranchCutError";
  if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
  if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  return "Error";
}

const Target& require_target(const std::string& name, std::optional<TargetKind> kind) {
  const Target* t = find_target(name);
  if (!t) throw UsageError("unknown target: " + name);
  if (kind && t->kind != *kind) {
    throw UsageError("target " + name + " is a " + (t->kind == TargetKind::series ? "series" : "closed") +
                     " target");
  }
  return *t;
}

EvalOptions options_for(Branch branch, const SuiteConfig& config) {
  validate(config.budget());
  return {branch, config.budget()};
}

}  // namespace

int report_exception(const std::exception& e, std::ostream& err) {
  err << "error: " << error_kind(e) << ": " << e.what() << '\n';
  return exit_code_for(e);
}

int cmd_eval(const EvalRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const Target& target = require_target(request.target, request.kind);
    const TargetResult r = evaluate_target(target, request.params, options_for(request.branch, request.config));
    std::ostringstream line;
    line << "{\"target\":" << json_string(target.name) << ",\"re\":" << json_number(r.value.real())
         << ",\"im\":" << json_number(r.value.imag());
    if (r.series) {
      line << ",\"n_terms\":" << r.series->n_terms << ",\"tail_bound\":" << json_number(r.series->tail_bound)
           << ",\"converged\":" << (r.series->converged ? "true" : "false");
    }
    line << "}\n";
    out << line.str();
    return kExitOk;
  } catch (const std::exception& e) {
    return report_exception(e, err);
  }
}

int cmd_verify(const SuiteConfig& config, OutputFormat format, std::ostream& out, std::ostream& err) {
  SuiteResult result;
  try {
    result = run_suite(config);
  } catch (const std::exception& e) {
    return report_exception(e, err);
  }
  if (format == OutputFormat::csv) out << csv_header() << '\n';
  for (const SuiteEntry& e : result.entries) {
    out << (format == OutputFormat::jsonl ? to_json_line(e.report, e.index) : to_csv_line(e.report, e.index))
        << '\n';
  }
  const int total = result.passed + result.failed;
  if (format == OutputFormat::jsonl) {
    out << "{\"summary\":{\"total\":" << total << ",\"passed\":" << result.passed << ",\"failed\":" << result.failed
        << "}}\n";
  } else {
    out << "# summary: total=" << total << " passed=" << result.passed << " failed=" << result.failed << '\n';
  }
  return result.all_passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const SweepRequest& request, std::ostream& out, std::ostream& err) {
  const Target* target = nullptr;
  EvalOptions options;
  try {
    if (request.steps < 2) throw UsageError("steps must be at least 2");
    if (!std::isfinite(request.start) || !std::isfinite(request.stop)) {
      throw UsageError("sweep bounds must be finite");
    }
    target = &require_target(request.target, std::nullopt);
    const auto& names = target->params;
    const bool known = std::find(names.begin(), names.end(), request.var) != names.end();
    const bool theta = request.var == "theta" && std::find(names.begin(), names.end(), "z") != names.end();
    if (!known && !theta) throw UsageError("target " + target->name + " has no sweep variable " + request.var);
    options = options_for(request.branch, request.config);
  } catch (const std::exception& e) {
    return report_exception(e, err);
  }

  const bool csv = request.format == OutputFormat::csv;
  if (csv) out << csv_field(request.var) << ",re,im,n_terms,tail_bound,error\n";
  int succeeded = 0;
  int first_failure = kExitOk;
  for (int i = 0; i < request.steps; ++i) {
    const double x = request.start + (request.stop - request.start) * i / (request.steps - 1);
    ParamMap params = request.fixed;
    if (request.var == "theta") {
      params["z"] = Complex(std::cos(x), std::sin(x));
    } else {
      params[request.var] = Complex(x, 0.0);
    }
    std::optional<TargetResult> r;
    std::string error;
    try {
      r = evaluate_target(*target, params, options);
      ++succeeded;
    } catch (const std::exception& e) {
      error = std::string(error_kind(e)) + ": " + e.what();
      if (first_failure == kExitOk) first_failure = exit_code_for(e);
    }
    const bool has_series = r && r->series;
    if (csv) {
      out << format_number(x) << ',';
      if (r) {
        out << format_number(r->value.real()) << ',' << format_number(r->value.imag()) << ',';
      } else {
        out << ",,";
      }
      if (has_series) out << r->series->n_terms << ',' << format_number(r->series->tail_bound);
      else out << ',';
      out << ',' << csv_field(error) << '\n';
    } else {
      out << '{' << json_string(request.var) << ':' << json_number(x);
      if (r) out << ",\"re\":" << json_number(r->value.real()) << ",\"im\":" << json_number(r->value.imag());
      if (has_series) {
        out << ",\"n_terms\":" << r->series->n_terms << ",\"tail_bound\":" << json_number(r->series->tail_bound);
      }
      if (!error.empty()) out << ",\"error\":" << json_string(error);
      out << "}\n";
    }
  }
  if (succeeded > 0) return kExitOk;
  err << "error: every sweep row failed\n";
  return first_failure;
}

}  // namespace bilateral
