#pragma once
// Text, JSON and markdown renderings of suite reports and the registry.
#include <string>

#include "qbax/registry.hpp"

namespace qbax {

inline constexpr int kReportSchemaVersion = 1;

/// One line per check plus a summary line. Wall times only when timing is set.
std::string format_text(const SuiteReport& r, bool timing = false);
std::string format_json(const SuiteReport& r, bool timing = false);
/// Parses format_json output back; throws ConfigError on a schema mismatch.
SuiteReport parse_json_report(const std::string& text);
/// Table of id, anchor, claim.
std::string registry_markdown();
std::string format_result_line(const CheckResult& c, bool timing = false);

}  // namespace qbax
