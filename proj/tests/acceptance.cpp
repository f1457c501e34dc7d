// Acceptance criteria 1-8, one line each.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qbax/report.hpp"

using namespace qbax;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<CheckResult> run(std::string_view pattern) {
  RunConfig cfg;
  return run_suite(pattern, cfg).results;
}

// Every result must be exact (terms == 0) or below the pinned bound.
Outcome require(const std::vector<CheckResult>& rs, double bound, std::size_t min_count) {
  Outcome o;
  double worst = 0.0;
  std::string worst_id;
  for (const auto& r : rs) {
    bool good = r.passed();
    if (r.residual_kind == "terms") good = good && r.residual == 0.0;
    else if (r.residual_kind == "norm") good = good && r.residual < bound;
    if (!good) {
      o.ok = false;
      o.note += " failing " + r.id + ";";
    }
    if (r.residual_kind == "norm" && r.residual >= worst) {
      worst = r.residual;
      worst_id = r.id;
    }
  }
  if (rs.size() < min_count) {
    o.ok = false;
    o.note += " only " + std::to_string(rs.size()) + " checks;";
  }
  o.note += " " + std::to_string(rs.size()) + " checks";
  if (!worst_id.empty()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", worst %.2e", worst);
    o.note += buf + std::string(" at ") + worst_id;
  }
  return o;
}

std::vector<CheckResult> join(std::initializer_list<std::vector<CheckResult>> parts) {
  std::vector<CheckResult> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto rs = join({run("rll.glq2.*"), run("rll.ext.*"), run("rll.osc.*"), run("rll.weyl.*"), run("rll.constant.*")});
  Outcome o = require(rs, 0.0, 10);
  const double s = seconds_since(t0);
  if (s >= 60.0) o.ok = false;
  o.note += ", " + std::to_string(s) + " s (limit 60 s)";
  return o;
}

Outcome criterion2() {
  auto rs = run("id.*");
  Outcome o = require(join({rs, run("rmat.hecke"), run("rmat.flip_symmetry"), run("twist.oscillator"), run("twist.weyl"),
                            run("qdet.convention")}),
                      0.0, 30);
  if (rs.size() < 25) {
    o.ok = false;
    o.note += "; fewer than 25 identity checks";
  }
  return o;
}

Outcome criterion3() {
  Outcome o = require(run("catalog.confluence.*"), 0.0, 6);
  auto fault = run("fault.confluence.*");
  bool fault_fails = !fault.empty() && std::all_of(fault.begin(), fault.end(), [](auto& r) { return !r.passed(); });
  if (!fault_fails) o.ok = false;
  o.note += fault_fails ? "; fault injection fails as designed" : "; fault injection did not fail";
  return o;
}

Outcome criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = require(run("transfer.*"), 0.0, 9);
  const double s = seconds_since(t0);
  if (s >= 300.0) o.ok = false;
  o.note += ", " + std::to_string(s) + " s (limit 300 s)";
  return o;
}

Outcome criterion5() {
  Outcome a = require(join({run("qdilog.difference.*"), run("qdilog.unitarity.*"), run("qdilog.spectral.*"), run("qdilog.volterra.*"),
                            run("qdilog.freefield.*"), run("qdilog.reduction.*")}),
                      1e-8, 6);
  Outcome b = require(run("qdilog.ratio.*"), 1e-7, 1);
  return {a.ok && b.ok, a.note + ";" + b.note};
}

Outcome criterion6() {
  Outcome a = require(run("rep.relations"), 1e-12, 1);
  Outcome b = require(join({run("rep.rll.suite"), run("rep.transfer.*")}), 1e-10, 2);
  return {a.ok && b.ok, a.note + ";" + b.note};
}

Outcome criterion7() {
  auto zc = run("classical.zc");
  auto cont = join({run("classical.continuum.liouville"), run("classical.continuum.freefield_*")});
  Outcome o = require(join({zc, run("classical.volterra.duality"), run("classical.toda.trivial")}), 1e-12, 3);
  double worst_order = 1e300;
  for (const auto& r : cont) {
    worst_order = std::min(worst_order, r.residual);
    if (!(r.residual_kind == "order" && r.residual >= 1.0)) o.ok = false;
  }
  if (cont.size() != 3) o.ok = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, "; lowest continuum order %.3f (min 1.0)", worst_order);
  o.note += buf;
  return o;
}

Outcome criterion8() {
  RunConfig cfg;
  const std::string a = format_json(run_suite("all", cfg));
  const std::string b = format_json(run_suite("all", cfg));
  cfg.parallel = false;
  const std::string c = format_json(run_suite("all", cfg));
  Outcome o;
  o.ok = a == b && a == c;
  o.note = o.ok ? " parallel, parallel and serial full runs are byte-identical (" + std::to_string(a.size()) + " bytes)"
                : " full-run reports differ";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symbolic RLL suite, exact zero, < 60 s", criterion1},
      {"identity registry >= 25 entries, exact zero", criterion2},
      {"confluence of shipped presentations; fault injection fails", criterion3},
      {"transfer matrices: lambda independence, commutation, expansion, < 300 s", criterion4},
      {"quantum dilogarithm defects < 1e-8, spread < 1e-7", criterion5},
      {"root-of-unity channel: relations < 1e-12, RLL and transfer < 1e-10", criterion6},
      {"classical: zero curvature exact, order >= 1, duality and Toda < 1e-12", criterion7},
      {"determinism of seeded full runs", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    failed += !o.ok;
    std::printf("criterion %zu %s  %s |%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), o.note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
