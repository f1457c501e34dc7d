#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qbax/classical.hpp"
#include "qbax/diffexpr.hpp"
#include "qbax/error.hpp"

using namespace qbax;

namespace {

FieldConfig zero_config(int sites, double kappa, double beta) {
  FieldConfig c;
  c.phi.assign(static_cast<std::size_t>(sites), 0.0);
  c.pi.assign(static_cast<std::size_t>(sites), 0.0);
  c.kappa = kappa;
  c.beta = beta;
  return c;
}

FieldConfig random_config(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  FieldConfig c;
  for (int i = 0; i < 6; ++i) {
    c.phi.push_back(u(rng));
    c.pi.push_back(u(rng));
  }
  c.kappa = 0.3;
  c.beta = 1.4;
  return c;
}

}  // namespace

TEST_CASE("hand-computed link values at zero field") {
  // 1/2 + 1/2 + 1/2 (1 + 1) + 1/4 = 9/4 at kappa = 1.
  for (double v : h_liouville(zero_config(3, 1.0, 0.7))) CHECK(v == doctest::Approx(2 * std::log(1.5)).epsilon(1e-14));
  for (double v : h_freefield(zero_config(3, 0.2, 1.3))) CHECK(v == doctest::Approx(2 * std::log(4.0)).epsilon(1e-14));
  for (double v : h_volterra(zero_config(4, 0.2, 1.0), false)) CHECK(std::abs(v) < 1e-15);
  FieldConfig open = zero_config(4, 0.5, 1.0);
  open.periodic = false;
  CHECK(h_liouville(open).size() == 3);
}

TEST_CASE("Liouville log argument: kappa -> 0 limit and kappa^4 coefficient") {
  FieldConfig c = random_config(1);
  const double b = c.beta;
  for (std::size_t n = 0; n + 1 < c.phi.size(); ++n) {
    const double ps = c.pi[n] + c.pi[n + 1], fs = c.phi[n] + c.phi[n + 1], fd = c.phi[n] - c.phi[n + 1];
    FieldConfig tiny = c;
    tiny.kappa = 1e-9;
    CHECK(liouville_log_argument(tiny, n) ==
          doctest::Approx(0.5 * std::cosh(b * ps / 4) + 0.5 * std::cosh(b * fd / 2)).epsilon(1e-12));
    CHECK(liouville_kappa4_coefficient(c, n) ==
          doctest::Approx(0.25 * std::exp(b * ps / 4) * std::exp(-b * fs)).epsilon(1e-12));
  }
}

TEST_CASE("Toda links written out") {
  FieldConfig c = random_config(2);
  auto h = h_toda(c);
  const double b = c.beta;
  for (std::size_t n = 0; n < h.size(); ++n) {
    std::size_t m = (n + 1) % c.phi.size();
    double expect = -b * c.pi[n] / 4 + b * c.pi[m] / 4 - 2 * std::log(c.kappa) - b * c.phi[m] / 2 + b * c.phi[n] / 2;
    CHECK(h[n] == doctest::Approx(expect).epsilon(1e-13));
  }
  CHECK(toda_trivial_check(4).passed());
}

TEST_CASE("Volterra duality and self-dual r'") {
  FieldConfig c = random_config(3), flipped = c;
  for (double& v : flipped.phi) v = -v;
  auto a = h_volterra(c, true), b = h_volterra(flipped, false);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);
  auto sd = h_volterra(c, false, kSelfDualRPrime);
  for (std::size_t n = 0; n < sd.size(); ++n) {
    auto [sp, sm] = volterra_s(c, n);
    CHECK(sd[n] == doctest::Approx(std::log(std::cosh(sp)) + std::log(std::cosh(sm))).epsilon(1e-13));
  }
  CHECK(volterra_duality_check(5).passed());
  CHECK(volterra_selfdual_check(5).passed());
}

TEST_CASE("continuum limits") {
  const std::vector<double> ks{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  for (auto m : {ContinuumModel::liouville, ContinuumModel::freefield_volterra,
                 ContinuumModel::freefield_liouvillelimit}) {
    ContinuumReport r = continuum_check(m, ks, FieldPreset::mixed);
    CHECK(r.order >= 1.0);
    CHECK(r.monotone);
    CHECK(r.rows.size() == ks.size());
    ContinuumReport s = continuum_check(m, ks, FieldPreset::mixed, 1.0, 1.0, false);
    CHECK(s.order == r.order);
  }
  // Per-link constant of the free-field limit is 2 log 4 / gamma.
  ContinuumReport ff = continuum_check(ContinuumModel::freefield_liouvillelimit, ks, FieldPreset::sine, 2.0);
  CHECK(ff.fitted_constant == doctest::Approx(2 * std::log(4.0) / 0.5).epsilon(1e-8));
  // Zero field: the Liouville integral is L / gamma.
  ContinuumReport z = continuum_check(ContinuumModel::liouville, ks, FieldPreset::zero);
  CHECK(z.integral == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(format_report(z).find("fitted order") != std::string::npos);
  CHECK_THROWS_AS(continuum_check(ContinuumModel::liouville, {0.1}, FieldPreset::sine), DomainError);
}

TEST_CASE("sampling and validation") {
  FieldConfig c = sample_fields(FieldPreset::mixed, 2.0, 8, 1.0);
  CHECK(c.kappa == doctest::Approx(0.25));
  CHECK(c.pi[0] == doctest::Approx(0.25 * 0.5));
  FieldConfig bad = zero_config(3, -1.0, 1.0);
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(continuum_model_from_name("sine-gordon"), ConfigError);
  CHECK(field_preset_from_name("zero") == FieldPreset::zero);
}

TEST_CASE("formal derivatives") {
  DiffExpr phi = DiffExpr::symbol(DiffSym::Phi);
  DiffExpr dp = DiffExpr::symbol(DiffSym::dp);
  CHECK((phi * phi).d_plus().to_string() == (Coefficient(2) * (phi * dp)).to_string());
  DiffExpr e2 = DiffExpr::exponential(2, 0);
  CHECK((e2.d_plus() - Coefficient(2) * (dp * e2)).is_zero());
  CHECK((dp.d_minus() - DiffExpr::symbol(DiffSym::dpm)).is_zero());
  CHECK_THROWS_AS(dp.d_plus(), DomainError);
  DiffExpr box = DiffExpr::symbol(DiffSym::dpm, 3);
  CHECK((box.substitute_box(e2) - Coefficient(3) * e2).is_zero());
}

TEST_CASE("zero curvature reduces exactly on the equation of motion") {
  for (ZcPreset p : {ZcPreset::liouville, ZcPreset::volterra_freefield, ZcPreset::liouville_freefield}) {
    ZcResult z = zc_residual(p);
    CHECK(z.residual_terms() > 0);
    CHECK(z.reduced_terms() == 0);
  }
  // A wrong equation of motion leaves terms.
  ZcResult z = zc_residual(ZcPreset::liouville);
  DiffExpr wrong = DiffExpr::exponential(0, -1, Coefficient::monomial(Param::beta, -1, 4));
  CHECK_FALSE(z.residual[0][0].substitute_box(wrong).is_zero());
  CHECK(zc_check().passed());
}
