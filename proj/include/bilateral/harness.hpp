#pragma once

// Identity registry and suite runner behind the `verify` command, plus the
// table of evaluable targets behind `eval` and `sweep`.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bilateral/closed_forms.hpp"
#include "bilateral/report.hpp"
#include "bilateral/series.hpp"

namespace bilateral {

struct SuiteConfig {
  double rel_tol = 1e-6;
  std::int64_t max_half_width = 200000;
  int sample_count = 50;
  std::uint64_t rng_seed = 42;
  std::vector<std::string> identity_filter;  // empty = every identity
  unsigned threads = 0;                       // 0 = hardware concurrency
  // Power-of-two shift used by the z = -1 identity; only negative-control tests change it.
  double minus_one_exponent_shift = kMinusOneExponentShift;

  ConvergenceBudget budget() const { return {rel_tol, max_half_width}; }
};

void validate(const SuiteConfig& config);

/// Deterministic sampler: a standard-specified engine and an explicit
/// 53-bit mapping so streams match across standard libraries.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t stream);
  double unit();
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

using ParameterPoint = std::vector<NamedValue>;

Complex lookup(const ParameterPoint& point, std::string_view name);

struct Identity {
  std::string id;
  std::string description;
  double tolerance = 0.0;
  /// Draws the index-th point of the identity's validity domain.
  std::function<ParameterPoint(SampleRng&, int index)> sample;
  std::function<VerificationReport(const ParameterPoint&, const SuiteConfig&)> check;
};

const std::vector<Identity>& identity_registry();

/// nullptr when no identity has this id.
const Identity* find_identity(std::string_view id);

/// Sample points for one identity; independent of which other identities run.
std::vector<ParameterPoint> sample_points(const Identity& identity, const SuiteConfig& config);

/// Runs one identity at one point; exceptions become failed reports.
VerificationReport run_check(const Identity& identity, const ParameterPoint& point, const SuiteConfig& config);

struct SuiteEntry {
  VerificationReport report;
  std::size_t index = 0;  // sample index within the identity
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;  // registry order, then sample index
  int passed = 0;
  int failed = 0;
  bool all_passed() const { return failed == 0; }
};

/// Evaluates (identity, point) pairs concurrently; the result order does not
/// depend on scheduling. Throws UsageError for an unknown id in the filter.
SuiteResult run_suite(const SuiteConfig& config);

// ---------------------------------------------------------------------------
// Evaluable targets

using ParamMap = std::map<std::string, Complex>;

enum class TargetKind { closed, series };

struct TargetResult {
  Complex value;
  std::optional<SeriesValue> series;
};

struct EvalOptions {
  Branch branch = Branch::plus;
  ConvergenceBudget budget;
};

struct Target {
  std::string name;
  TargetKind kind;
  std::vector<std::string> params;
  std::string description;
  std::function<TargetResult(const ParamMap&, const EvalOptions&)> evaluate;
};

const std::vector<Target>& target_registry();
const Target* find_target(std::string_view name);

/// Checks that every parameter the target needs is present, then evaluates.
TargetResult evaluate_target(const Target& target, const ParamMap& params, const EvalOptions& options);

}  // namespace bilateral
