#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bilateral/complex_math.hpp"

namespace bilateral {

struct NamedValue {
  std::string name;
  Complex value;
};

enum class CheckStatus { passed, failed, not_applicable, error };

const char* to_string(CheckStatus status);

/// One component of a composite verification (for instance the ratio test of a derivation path).
struct SubCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::passed;
  int evaluated = 0;
  int skipped = 0;
  std::string notes;
};

SubCheck make_subcheck(std::string name, double residual, double tolerance);
SubCheck not_applicable_subcheck(std::string name, double tolerance, std::string reason);
SubCheck error_subcheck(std::string name, double tolerance, std::string reason);

/// Outcome of checking one identity at one parameter point.
///
/// Invariant: passed == (residual <= tolerance). For composite reports the
/// residual is the worst sub-check residual divided by its tolerance and the
/// tolerance is 1.
struct VerificationReport {
  std::string identity_id;
  std::vector<NamedValue> parameter_point;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::optional<std::int64_t> n_terms_used;
  std::string notes;
  std::vector<SubCheck> subchecks;
};

VerificationReport make_report(std::string identity_id, std::vector<NamedValue> point, double residual,
                               double tolerance, std::string notes = {});

/// Builds a composite report from sub-checks. Failed or errored sub-checks
/// fail the report; not-applicable ones are listed but do not count.
VerificationReport make_composite_report(std::string identity_id, std::vector<NamedValue> point,
                                         std::vector<SubCheck> subchecks, std::string notes = {});

/// Report for a point whose evaluation threw.
VerificationReport make_error_report(std::string identity_id, std::vector<NamedValue> point,
                                     double tolerance, std::string message);

/// Formats a double with 17 significant digits ("nan"/"inf" are emitted as JSON null by callers).
std::string format_number(double x);

/// a+bi with 17 significant digits per component.
std::string format_complex(Complex z);

/// One JSON object per line; `index` is the sample index within the identity.
std::string to_json_line(const VerificationReport& report, std::size_t index);

std::string csv_header();
std::string to_csv_line(const VerificationReport& report, std::size_t index);

/// Quotes a CSV field when it contains a delimiter, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace bilateral
