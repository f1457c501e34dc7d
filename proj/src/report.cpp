#include "qbax/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "qbax/error.hpp"

namespace qbax {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string residual_text(const CheckResult& c) {
  if (c.residual_kind == "terms") return std::to_string(static_cast<long long>(c.residual)) + " terms";
  if (c.residual_kind == "norm") return sci(c.residual) + " (tol " + sci(c.tolerance) + ")";
  if (c.residual_kind == "order") return "order " + sci(c.residual) + " (min " + sci(c.tolerance) + ")";
  return c.residual_kind;
}

Status status_from(const std::string& s) {
  for (Status x : {Status::pass, Status::fail, Status::skipped})
    if (status_name(x) == s) return x;
  throw ConfigError("unknown status '" + s + "'");
}

}  // namespace

std::string format_result_line(const CheckResult& c, bool timing) {
  std::string s = std::string(c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP") + "  " +
                  c.id + "  " + residual_text(c);
  if (timing) s += "  " + std::to_string(static_cast<long long>(c.wall_ms)) + " ms";
  if (!c.detail.empty()) s += "  | " + c.detail;
  return s;
}

std::string format_text(const SuiteReport& r, bool timing) {
  std::ostringstream os;
  os << "qbax " << r.version << "  filter " << r.filter << "  seed " << r.config.seed << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  for (const auto& c : r.results) os << format_result_line(c, timing) << "\n";
  os << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped\n";
  return os.str();
}

std::string format_json(const SuiteReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = r.version;
  j["filter"] = r.filter;
  j["config"] = {{"seed", r.config.seed}, {"tol", r.config.tol}, {"max_sites", r.config.max_sites}};
  j["warnings"] = r.warnings;
  auto& arr = j["results"] = nlohmann::ordered_json::array();
  for (const auto& c : r.results) {
    nlohmann::ordered_json e{{"id", c.id},
                             {"anchor", c.anchor},
                             {"claim", c.claim},
                             {"status", status_name(c.status)},
                             {"residual_kind", c.residual_kind},
                             {"residual", c.residual},
                             {"tolerance", c.tolerance},
                             {"detail", c.detail}};
    if (timing) e["wall_ms"] = c.wall_ms;
    arr.push_back(std::move(e));
  }
  j["counts"] = {{"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}};
  return j.dump(2) + "\n";
}

SuiteReport parse_json_report(const std::string& text) {
  SuiteReport r;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw ConfigError("report schema version mismatch");
    r.version = j.at("tool_version").get<std::string>();
    r.filter = j.at("filter").get<std::string>();
    r.config.seed = j.at("config").at("seed").get<std::uint64_t>();
    r.config.tol = j.at("config").at("tol").get<double>();
    r.config.max_sites = j.at("config").at("max_sites").get<int>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& e : j.at("results")) {
      CheckResult c;
      c.id = e.at("id");
      c.anchor = e.at("anchor");
      c.claim = e.at("claim");
      c.status = status_from(e.at("status"));
      c.residual_kind = e.at("residual_kind");
      c.residual = e.at("residual");
      c.tolerance = e.at("tolerance");
      c.detail = e.at("detail");
      c.wall_ms = e.value("wall_ms", 0.0);
      r.results.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("malformed report: ") + ex.what());
  }
  tally(r);
  return r;
}

std::string registry_markdown() {
  std::ostringstream os;
  os << "# Registered checks\n\n| id | anchor | claim |\n|---|---|---|\n";
  for (const auto& e : registry()) os << "| `" << e.id << "` | " << e.anchor << " | " << e.claim << " |\n";
  os << "\n" << registry().size() << " checks.\n";
  return os.str();
}

}  // namespace qbax
