#pragma once
// Named checks, glob selection and the suite runner.
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qbax/check.hpp"

namespace qbax {

inline constexpr std::string_view kToolVersion = "0.3.0";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  /// Overrides the registered tolerance of numeric checks when > 0.
  double tol = 0.0;
  int max_sites = 3;
  bool parallel = true;
};

struct RegistryEntry {
  std::string id;
  std::string anchor;
  std::string claim;
  std::string group;
  std::function<CheckResult(const RunConfig&)> run;
};

/// Sorted by id; immutable after first use.
const std::vector<RegistryEntry>& registry();
const RegistryEntry* find_entry(std::string_view id);

/// Shell-style glob on ids; "all" matches everything except fault.* entries, which need a pattern starting with "fault".
bool id_matches(std::string_view pattern, std::string_view id);
std::vector<const RegistryEntry*> select(std::string_view pattern);

/// Runs one entry; exceptions become a failing result.
CheckResult run_entry(const RegistryEntry& e, const RunConfig& cfg);

struct SuiteReport {
  std::string version{kToolVersion};
  std::string filter;
  RunConfig config;
  std::vector<CheckResult> results;
  std::vector<std::string> warnings;
  std::size_t passed = 0, failed = 0, skipped = 0;

  bool ok() const { return failed == 0; }
};

/// Checks run concurrently; results are merged in id order.
SuiteReport run_suite(std::string_view pattern, const RunConfig& cfg = {});
/// Recomputes counts from results.
void tally(SuiteReport& r);

}  // namespace qbax
