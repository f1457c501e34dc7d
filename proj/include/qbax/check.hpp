#pragma once
#include <string>
#include <string_view>

namespace qbax {

enum class Status { pass, fail, skipped };

std::string_view status_name(Status s);

/// Outcome of one registered check.
struct CheckResult {
  std::string id;
  std::string anchor;
  std::string claim;
  Status status = Status::skipped;
  // "terms" for exact symbolic checks (surviving term count), "norm" for numeric ones.
  std::string residual_kind = "terms";
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double wall_ms = 0.0;

  bool passed() const { return status == Status::pass; }
};

inline CheckResult symbolic_result(std::size_t surviving_terms, std::string detail = {}) {
  CheckResult r;
  r.residual_kind = "terms";
  r.residual = static_cast<double>(surviving_terms);
  r.status = surviving_terms == 0 ? Status::pass : Status::fail;
  r.detail = std::move(detail);
  return r;
}

inline CheckResult numeric_result(double residual, double tol, std::string detail = {}) {
  CheckResult r;
  r.residual_kind = "norm";
  r.residual = residual;
  r.tolerance = tol;
  r.status = residual < tol ? Status::pass : Status::fail;
  r.detail = std::move(detail);
  return r;
}

}  // namespace qbax
