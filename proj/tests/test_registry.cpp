#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qbax/error.hpp"
#include "qbax/report.hpp"

using namespace qbax;

TEST_CASE("registry ids are unique, sorted and documented") {
  const auto& reg = registry();
  CHECK(reg.size() > 100);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(ids.insert(reg[i].id).second);
    if (i > 0) CHECK(reg[i - 1].id < reg[i].id);
    CHECK_FALSE(reg[i].anchor.empty());
    CHECK_FALSE(reg[i].claim.empty());
  }
  std::size_t identities = 0;
  for (const auto& e : reg) identities += e.id.starts_with("id.");
  CHECK(identities >= 25);
  std::string md = registry_markdown();
  for (const auto& e : reg) CHECK(md.find("`" + e.id + "`") != std::string::npos);
}

TEST_CASE("glob selection") {
  CHECK(id_matches("rll.ext.*", "rll.ext.g"));
  CHECK_FALSE(id_matches("rll.ext.*", "rll.glq2.rg"));
  CHECK(id_matches("all", "qdilog.difference.grid"));
  CHECK(id_matches("*", "catalog.hom.Q"));
  CHECK_FALSE(id_matches("all", "fault.confluence.missing_cb"));
  CHECK_FALSE(id_matches("*", "fault.confluence.missing_cb"));
  CHECK(id_matches("fault.*", "fault.confluence.missing_cb"));
  CHECK(select("rll.ext.*").size() == 2);
  CHECK(find_entry("rmat.hecke") != nullptr);
  CHECK(find_entry("nope") == nullptr);
}

TEST_CASE("unmatched filter warns and reports nothing") {
  SuiteReport r = run_suite("does.not.exist");
  CHECK(r.results.empty());
  CHECK(r.warnings.size() == 1);
  CHECK(r.ok());
}

TEST_CASE("fault injection fails and names the critical pair") {
  SuiteReport r = run_suite("fault.*");
  CHECK(r.failed == r.results.size());
  CHECK_FALSE(r.ok());
  bool named = false;
  for (const auto& c : r.results) named = named || c.detail.find("critical pair") != std::string::npos;
  CHECK(named);
}

TEST_CASE("reports are deterministic and round trip") {
  RunConfig cfg;
  SuiteReport a = run_suite("catalog.*", cfg), b = run_suite("catalog.*", cfg);
  cfg.parallel = false;
  SuiteReport s = run_suite("catalog.*", cfg);
  CHECK(format_json(a) == format_json(b));
  CHECK(format_json(a) == format_json(s));
  CHECK(format_text(a) == format_text(s));
  SuiteReport back = parse_json_report(format_json(a));
  CHECK(format_json(back) == format_json(a));
  CHECK(back.passed == a.passed);
  CHECK(format_json(a, true).find("wall_ms") != std::string::npos);
  CHECK(format_json(a).find("wall_ms") == std::string::npos);
  CHECK_THROWS_AS(parse_json_report("{\"schema_version\": 99}"), ConfigError);
}

TEST_CASE("tolerance override applies to numeric checks only") {
  RunConfig cfg;
  cfg.tol = 1e-30;
  SuiteReport r = run_suite("rep.relations", cfg);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].tolerance == 1e-30);
  CHECK_FALSE(r.results[0].passed());
  SuiteReport sym = run_suite("rmat.hecke", cfg);
  CHECK(sym.results[0].passed());
}

TEST_CASE("exceptions become failures") {
  RegistryEntry e{"test.throws", "anchor", "claim", "test",
                  [](const RunConfig&) -> CheckResult { throw DomainError("boom"); }};
  CheckResult r = run_entry(e, {});
  CHECK(r.status == Status::fail);
  CHECK(r.detail.find("boom") != std::string::npos);
  CHECK(r.id == "test.throws");
}
