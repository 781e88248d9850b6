#include "bilateral/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace bilateral {

namespace {

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

bool within(double residual, double tolerance) { return residual <= tolerance; }  // false for NaN

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::not_applicable: return "not_applicable";
    case CheckStatus::error: return "error";
  }
  return "error";
}

SubCheck make_subcheck(std::string name, double residual, double tolerance) {
  SubCheck sc;
  sc.name = std::move(name);
  sc.residual = residual;
  sc.tolerance = tolerance;
  sc.status = within(residual, tolerance) ? CheckStatus::passed : CheckStatus::failed;
  sc.evaluated = 1;
  return sc;
}

SubCheck not_applicable_subcheck(std::string name, double tolerance, std::string reason) {
  SubCheck sc;
  sc.name = std::move(name);
  sc.tolerance = tolerance;
  sc.status = CheckStatus::not_applicable;
  sc.notes = std::move(reason);
  return sc;
}

SubCheck error_subcheck(std::string name, double tolerance, std::string reason) {
  SubCheck sc = not_applicable_subcheck(std::move(name), tolerance, std::move(reason));
  sc.status = CheckStatus::error;
  sc.residual = std::numeric_limits<double>::quiet_NaN();
  return sc;
}

VerificationReport make_report(std::string identity_id, std::vector<NamedValue> point, double residual,
                               double tolerance, std::string notes) {
  VerificationReport r;
  r.identity_id = std::move(identity_id);
  r.parameter_point = std::move(point);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = within(residual, tolerance);
  r.notes = std::move(notes);
  return r;
}

VerificationReport make_composite_report(std::string identity_id, std::vector<NamedValue> point,
                                         std::vector<SubCheck> subchecks, std::string notes) {
  double worst = 0.0;
  for (const SubCheck& sc : subchecks) {
    if (sc.status == CheckStatus::not_applicable) continue;
    if (sc.status == CheckStatus::error) {
      worst = std::numeric_limits<double>::infinity();
      continue;
    }
    double normalized = sc.tolerance > 0.0 ? sc.residual / sc.tolerance : sc.residual;
    if (std::isnan(normalized)) normalized = std::numeric_limits<double>::infinity();
    worst = std::max(worst, normalized);
  }
  VerificationReport r = make_report(std::move(identity_id), std::move(point), worst, 1.0, std::move(notes));
  r.subchecks = std::move(subchecks);
  return r;
}

VerificationReport make_error_report(std::string identity_id, std::vector<NamedValue> point,
                                     double tolerance, std::string message) {
  VerificationReport r = make_report(std::move(identity_id), std::move(point),
                                     std::numeric_limits<double>::quiet_NaN(), tolerance,
                                     "error: " + std::move(message));
  r.passed = false;
  return r;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string im = format_number(z.imag());
  if (!im.empty() && im[0] != '-') im.insert(im.begin(), '+');
  return format_number(z.real()) + im + "i";
}

std::string to_json_line(const VerificationReport& report, std::size_t index) {
  std::ostringstream out;
  out << "{\"identity_id\":" << json_string(report.identity_id) << ",\"index\":" << index << ",\"params\":{";
  for (std::size_t i = 0; i < report.parameter_point.size(); ++i) {
    const NamedValue& nv = report.parameter_point[i];
    if (i) out << ',';
    out << json_string(nv.name) << ":{\"re\":" << json_number(nv.value.real())
        << ",\"im\":" << json_number(nv.value.imag()) << '}';
  }
  out << "},\"residual\":" << json_number(report.residual) << ",\"tolerance\":" << json_number(report.tolerance)
      << ",\"passed\":" << (report.passed ? "true" : "false") << ",\"n_terms\":";
  if (report.n_terms_used) {
    out << *report.n_terms_used;
  } else {
    out << "null";
  }
  out << ",\"notes\":" << json_string(report.notes) << ",\"subchecks\":[";
  for (std::size_t i = 0; i < report.subchecks.size(); ++i) {
    const SubCheck& sc = report.subchecks[i];
    if (i) out << ',';
    out << "{\"name\":" << json_string(sc.name) << ",\"status\":" << json_string(to_string(sc.status))
        << ",\"residual\":" << json_number(sc.residual) << ",\"tolerance\":" << json_number(sc.tolerance)
        << ",\"evaluated\":" << sc.evaluated << ",\"skipped\":" << sc.skipped
        << ",\"notes\":" << json_string(sc.notes) << '}';
  }
  out << "]}";
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string csv_header() { return "identity_id,index,params,residual,tolerance,passed,n_terms,notes"; }

std::string to_csv_line(const VerificationReport& report, std::size_t index) {
  std::string params;
  for (std::size_t i = 0; i < report.parameter_point.size(); ++i) {
    if (i) params += ';';
    params += report.parameter_point[i].name + "=" + format_complex(report.parameter_point[i].value);
  }
  std::string notes = report.notes;
  for (const SubCheck& sc : report.subchecks) {
    if (!notes.empty()) notes += "; ";
    notes += sc.name + ":" + to_string(sc.status) + ":" + format_number(sc.residual);
  }
  std::ostringstream out;
  out << csv_field(report.identity_id) << ',' << index << ',' << csv_field(params) << ','
      << format_number(report.residual) << ',' << format_number(report.tolerance) << ','
      << (report.passed ? "true" : "false") << ',';
  if (report.n_terms_used) out << *report.n_terms_used;
  out << ',' << csv_field(notes);
  return out.str();
}

}  // namespace bilateral
