#include "qbax/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <exception>

#include "qbax/catalog.hpp"
#include "qbax/classical.hpp"
#include "qbax/cyclicrep.hpp"
#include "qbax/error.hpp"
#include "qbax/identities.hpp"
#include "qbax/lmatrices.hpp"
#include "qbax/qdilog.hpp"

namespace qbax {

namespace {

using Run = std::function<CheckResult(const RunConfig&)>;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string algebra_short(AlgebraId a) {
  switch (a) {
    case AlgebraId::GLq2: return "glq2";
    case AlgebraId::GLq2Ext: return "ext";
    case AlgebraId::GLq2ExtPrime: return "extprime";
    case AlgebraId::GLq2ExtDoublePrime: return "extdoubleprime";
    case AlgebraId::Aq: return "osc";
    case AlgebraId::Wq: return "weyl";
  }
  return "?";
}

std::string l_short(std::string_view name) {
  std::string s(name);
  if (auto p = s.find('('); p != std::string::npos) s.erase(p);
  return lower(s);
}

void add(std::vector<RegistryEntry>& v, std::string id, std::string anchor, std::string claim, Run run) {
  std::string group = id.substr(0, id.find('.'));
  v.push_back({std::move(id), std::move(anchor), std::move(claim), std::move(group), std::move(run)});
}

void add_identities(std::vector<RegistryEntry>& v) {
  for (const auto& c : identity_registry())
    add(v, "id." + c.id, c.anchor, c.claim, [&c](const RunConfig&) { return run_identity(c); });
}

void add_catalog(std::vector<RegistryEntry>& v) {
  for (AlgebraId a : kAllAlgebras)
    add(v, "catalog.confluence." + algebra_short(a), "critical pairs of " + std::string(algebra_name(a)),
        "every overlap ambiguity resolves to one normal form",
        [a](const RunConfig&) { return check_confluence(*build_presentation(a)); });
  for (MapId m : kAllMaps) {
    std::string n(map_name(m));
    add(v, "catalog.hom." + n, "homomorphism " + n, "images of the defining relations vanish",
        [m](const RunConfig&) { return verify_hom(build_map(m)); });
  }
  for (MapId m : {MapId::Delta, MapId::delta, MapId::deltaA, MapId::deltaW}) {
    std::string n(map_name(m));
    add(v, "catalog.coassoc." + n, "coassociativity of " + n, "(id x m) m = (m x id) m on generators",
        [m](const RunConfig&) { return verify_coassoc(build_map(m)); });
  }
  for (MapId m : {MapId::Delta, MapId::delta, MapId::deltaA, MapId::deltaW, MapId::Q, MapId::Qprime}) {
    std::string n(map_name(m));
    add(v, "catalog.star." + n, "star compatibility of " + n, "(* x *) m = m *",
        [m](const RunConfig&) { return verify_star_hom(build_map(m)); });
  }
  for (const auto& e : central_elements()) {
    std::string id = "catalog.central." + lower(e.name) + "." + algebra_short(e.algebra);
    add(v, id, e.name + " central in " + std::string(algebra_name(e.algebra)),
        "commutes with every generator", [e](const RunConfig&) { return check_central(e); });
  }
  add(v, "catalog.counit.Delta", "counit of the standard coproduct", "eps(g) = 1 is a counit",
      [](const RunConfig&) { return counit_identity_Delta(); });
  add(v, "catalog.counit.absent", "non-standard coproduct has no counit",
      "scalar constraints from (id x eps) m = id are contradictory", [](const RunConfig&) { return verify_counit_absence(); });
  add(v, "catalog.iota.involution", "iota squared", "iota o iota = id on generators",
      [](const RunConfig&) { return check_iota_involution(); });
}

void add_lmatrices(std::vector<RegistryEntry>& v) {
  for (const auto& info : l_kinds()) {
    if (!info.partner) continue;
    RKind r = *info.partner;
    LKind l = info.kind;
    add(v, "rll." + algebra_short(info.algebra) + "." + l_short(info.name),
        std::string(info.anchor), "R12 L13 L23 = L23 L13 R12 with " + std::string(r_kind_name(r)),
        [r, l](const RunConfig&) { return rll_check(r, l); });
  }
  add(v, "rll.constant.suite", "constant RLL relations", "R+-, P with g, g+ and g- pairings",
      [](const RunConfig&) { return constant_rll_suite(); });
  add(v, "rll.free.expansion", "free expansion of the (R, g) relation", "nonzero before reduction, zero after",
      [](const RunConfig&) { return free_rll_expansion_check(); });
  add(v, "rll.free.coefficients", "Laurent coefficients of the (Rhat, ghat) relation",
      "each coefficient is a constant RLL relation", [](const RunConfig&) { return rll_coefficient_matching_check(); });
  add(v, "rmat.hecke", "Hecke condition", "(P R+ - q)(P R+ + q^-1) = 0", [](const RunConfig&) { return hecke_check(); });
  add(v, "rmat.flip_symmetry", "R symmetry", "R(l) from R+ and R- is symmetric under the flip",
      [](const RunConfig&) { return flip_symmetry_check(); });
  add(v, "rmat.construction", "R from Rhat", "sigma_3 twist and Rhat = l R+ - l^-1 R-",
      [](const RunConfig&) { return r_construction_check(); });
  for (RKind r : {RKind::R, RKind::Rhat}) {
    std::string n = lower(r_kind_name(r));
    add(v, "rmat.ybe." + n, "Yang-Baxter equation for " + std::string(r_kind_name(r)), "R12 R13 R23 = R23 R13 R12",
        [r](const RunConfig&) {
          return symbolic_result(ybe_residual(r).term_count(), "8x8 residual entries");
        });
  }
  add(v, "qdet.convention", "q-determinant convention", "qdet g(l) = D_q - q^-1 l^2 eta'",
      [](const RunConfig&) { return qdet_convention_check(); });
  add(v, "qdet.ghat", "q-determinant of ghat", "qdet g(l) = -qdet ghat(l)",
      [](const RunConfig&) { return qdet_ghat_check(); });
  add(v, "twist.oscillator", "twist of the oscillator L-matrix", "grading twist maps LA to the two-parameter form",
      [](const RunConfig&) { return twist_oscillator_check(); });
  add(v, "twist.weyl", "twist of the Weyl L-matrix", "grading twist of gpphat",
      [](const RunConfig&) { return twist_weyl_check(); });
  add(v, "twist.toda", "relativistic Toda twist", "polynomial Toda form from the twisted Weyl image",
      [](const RunConfig&) { return twist_toda_check(); });
  add(v, "twist.suite", "twist identities", "grading weights and phase rotations",
      [](const RunConfig&) { return twist_identity_suite(); });
  for (int n : {1, 2, 3})
    add(v, "transfer.rg.lambda_free.n" + std::to_string(n), "transfer matrix of rg",
        "T(l) does not depend on l", [n](const RunConfig& c) { return transfer_lambda_independence_check(n, c.max_sites); });
  for (LKind l : {LKind::ghat, LKind::LqDST})
    for (int n : {2, 3})
      add(v, "transfer." + l_short(l_info(l).name) + ".commute.n" + std::to_string(n),
          "commuting transfer matrices of " + std::string(l_info(l).name), "[T(l), T(m)] = 0",
          [l, n](const RunConfig& c) { return transfer_commutator_check(l, n, c.max_sites); });
  for (int n : {2, 3})
    add(v, "transfer.lqdst.expansion.n" + std::to_string(n), "Laurent expansion of the q-DST transfer matrix",
        "leading coefficients are the quasi-momentum and the local Hamiltonian",
        [n](const RunConfig& c) { return qdst_expansion_check(n, c.max_sites); });
}

void add_qdilog(std::vector<RegistryEntry>& v) {
  add(v, "qdilog.difference.grid", "difference equation S(q^-1 x) = (1 + x) S(q x)", "defect on the omega x grid",
      [](const RunConfig&) { return difference_grid_check(1e-8); });
  add(v, "qdilog.unitarity.grid", "unitarity of S_omega", "|S(x)| = 1 for x > 0",
      [](const RunConfig&) { return unitarity_grid_check(1e-8); });
  add(v, "qdilog.spectral.samples", "scalar solution of the spectral equation", "defect on 100 seeded samples",
      [](const RunConfig& c) { return spectral_sample_check(c.seed, 100, 1e-8); });
  for (FeqId f : {FeqId::volterra, FeqId::freefield, FeqId::reduction}) {
    std::string n(feq_name(f));
    add(v, "qdilog." + n + ".samples", "functional equation " + n, "defect on 100 seeded samples",
        [f](const RunConfig& c) { return feq_sample_check(f, c.seed, 100, 1e-8); });
  }
  add(v, "qdilog.ratio.spread", "w-independence of the ratio of solutions", "spread over the w grid",
      [](const RunConfig&) { return ratio_spread_check(1e-7); });
  add(v, "qdilog.compact.consistency", "integral against the product formula for Im omega^2 > 0",
      "relative agreement", [](const RunConfig&) { return compact_consistency_check(1e-6); });
  add(v, "qdilog.self_duality", "omega <-> 1/omega symmetry", "S is invariant",
      [](const RunConfig&) { return self_duality_check(1e-8); });
  add(v, "qdilog.parallel", "parallel quadrature reference", "parallel equals serial",
      [](const RunConfig&) { return parallel_consistency_check(1e-13); });
}

void add_cyclicrep(std::vector<RegistryEntry>& v) {
  add(v, "rep.relations", "clock/shift representations", "defining relations and central images",
      [](const RunConfig&) { return rep_relations_check(1e-12); });
  add(v, "rep.rll.suite", "numeric RLL relations", "20 unit-circle points, N in {3,5,7}",
      [](const RunConfig& c) { return rll_num_suite(c.seed, 1e-10); });
  add(v, "rep.rll.negative_control", "wrong R partner", "residual stays visible",
      [](const RunConfig& c) { return rll_num_negative_control(c.seed, 1e-3); });
  add(v, "rep.transfer.commute", "numeric transfer matrices", "[T(l), T(m)] = 0 at 3 sites",
      [](const RunConfig& c) { return transfer_commutator_num_check(c.seed, 3, 1e-10); });
  add(v, "rep.qdst.fit", "Laurent coefficients of T by DFT", "match the closed forms",
      [](const RunConfig&) { return qdst_fit_check(2, 1e-10); });
}

void add_classical(std::vector<RegistryEntry>& v) {
  add(v, "classical.zc", "zero curvature", "reduces to zero on the equation of motion for all three pairs",
      [](const RunConfig&) { return zc_check(); });
  for (ContinuumModel m : {ContinuumModel::liouville, ContinuumModel::freefield_volterra,
                           ContinuumModel::freefield_liouvillelimit})
    add(v, "classical.continuum." + std::string(continuum_model_name(m)), "continuum limit",
        "order >= 1 over four halvings of kappa", [m](const RunConfig&) { return continuum_order_check(m, 1.0); });
  add(v, "classical.volterra.duality", "Volterra duality", "dual(phi) = primal(-phi)",
      [](const RunConfig& c) { return volterra_duality_check(c.seed, 1e-12); });
  add(v, "classical.volterra.selfdual", "self-dual r'", "log cosh s+ + log cosh s-",
      [](const RunConfig& c) { return volterra_selfdual_check(c.seed, 1e-12); });
  add(v, "classical.toda.trivial", "relativistic Toda sum", "periodic sum is N log Z_q",
      [](const RunConfig& c) { return toda_trivial_check(c.seed, 1e-12); });
  add(v, "classical.liouville.kappa4", "kappa^4 term of the Liouville link", "1/4 e^{beta Pi/4} e^{-beta Phi}",
      [](const RunConfig& c) { return liouville_kappa4_check(c.seed, 1e-12); });
}

void add_faults(std::vector<RegistryEntry>& v) {
  add(v, "fault.confluence.missing_cb", "GLq2 without c b = b c", "must fail and name the critical pair",
      [](const RunConfig&) { return check_confluence(*build_presentation(AlgebraId::GLq2)->without_rule("c", "b")); });
  add(v, "fault.identity.x_decomposition_uncorrected", "uncorrected X(l) decomposition", "must fail with surviving terms",
      [](const RunConfig&) { return symbolic_result(x_decomposition_uncorrected().terms().size(), "uncorrected form"); });
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> v;
    add_identities(v);
    add_catalog(v);
    add_lmatrices(v);
    add_qdilog(v);
    add_cyclicrep(v);
    add_classical(v);
    add_faults(v);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].id == v[i - 1].id) throw ConfigError("duplicate registry id " + v[i].id);
    return v;
  }();
  return entries;
}

const RegistryEntry* find_entry(std::string_view id) {
  for (const auto& e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

bool id_matches(std::string_view pattern, std::string_view id) {
  if (id.starts_with("fault.") && !pattern.starts_with("fault")) return false;
  if (pattern == "all" || pattern.empty()) return true;
  return fnmatch(std::string(pattern).c_str(), std::string(id).c_str(), 0) == 0;
}

std::vector<const RegistryEntry*> select(std::string_view pattern) {
  std::vector<const RegistryEntry*> out;
  for (const auto& e : registry())
    if (id_matches(pattern, e.id)) out.push_back(&e);
  return out;
}

CheckResult run_entry(const RegistryEntry& e, const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = e.run(cfg);
  } catch (const std::exception& ex) {
    r = CheckResult{};
    r.status = Status::fail;
    r.residual_kind = "error";
    r.detail = std::string("exception: ") + ex.what();
  }
  if (cfg.tol > 0.0 && r.residual_kind == "norm") {
    r.tolerance = cfg.tol;
    r.status = r.residual < cfg.tol ? Status::pass : Status::fail;
  }
  r.id = e.id;
  r.anchor = e.anchor;
  r.claim = e.claim;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void tally(SuiteReport& r) {
  r.passed = r.failed = r.skipped = 0;
  for (const auto& c : r.results) {
    switch (c.status) {
      case Status::pass: ++r.passed; break;
      case Status::fail: ++r.failed; break;
      case Status::skipped: ++r.skipped; break;
    }
  }
}

SuiteReport run_suite(std::string_view pattern, const RunConfig& cfg) {
  SuiteReport rep;
  rep.filter = std::string(pattern);
  rep.config = cfg;
  auto chosen = select(pattern);
  if (chosen.empty()) rep.warnings.push_back("filter '" + rep.filter + "' matches no registered check");
  rep.results.resize(chosen.size());
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (std::size_t i = 0; i < chosen.size(); ++i) rep.results[i] = run_entry(*chosen[i], cfg);
  tally(rep);
  return rep;
}

}  // namespace qbax
