#pragma once

// Structured result of one verification suite or measured claim.

#include <cstdio>
#include <string>

namespace qsg {

enum class ClaimStatus { pass, fail, report_only };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    default:
      return "report-only";
  }
}

struct ClaimVerdict {
  std::string claim_id;
  std::string paper_ref;
  ClaimStatus status = ClaimStatus::report_only;
  double max_residual = 0.0;
  long samples = 0;
  std::string details;

  bool operator==(const ClaimVerdict&) const = default;
};

// Fixed-width scientific formatting, stable across runs.
inline std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

}  // namespace qsg
