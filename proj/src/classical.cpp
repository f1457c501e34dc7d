#include "qbax/classical.hpp"

#include <algorithm>
#include <boost/math/quadrature/trapezoidal.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qbax/diffexpr.hpp"
#include "qbax/error.hpp"

namespace qbax {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t next(const FieldConfig& c, std::size_t n) { return (n + 1) % c.phi.size(); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

FieldConfig random_config(std::mt19937_64& rng, int sites) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), k(0.05, 0.8), b(0.5, 2.0);
  FieldConfig c;
  for (int i = 0; i < sites; ++i) {
    c.phi.push_back(u(rng));
    c.pi.push_back(u(rng));
  }
  c.kappa = k(rng);
  c.beta = b(rng);
  return c;
}
}  // namespace

void FieldConfig::validate() const {
  if (phi.size() != pi.size()) throw DomainError("field arrays differ in length");
  if (phi.size() < 2) throw DomainError("need at least two sites");
  if (!(kappa > 0.0)) throw DomainError("kappa must be positive");
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
}

std::size_t FieldConfig::links() const { return periodic ? phi.size() : phi.size() - 1; }

double liouville_log_argument(const FieldConfig& c, std::size_t n) {
  const std::size_t m = next(c, n);
  const double b = c.beta, k2 = c.kappa * c.kappa;
  const double psum = c.pi[n] + c.pi[m], fsum = c.phi[n] + c.phi[m], fdiff = c.phi[n] - c.phi[m];
  const double ch = std::cosh(0.5 * b * fdiff);
  return 0.5 * std::cosh(0.25 * b * psum) + 0.5 * ch +
         0.5 * k2 * std::exp(-0.5 * b * fsum) * (1.0 + std::exp(0.25 * b * psum) * ch) +
         0.25 * k2 * k2 * std::exp(0.25 * b * psum) * std::exp(-b * fsum);
}

std::vector<double> h_liouville(const FieldConfig& cfg) {
  cfg.validate();
  std::vector<double> h;
  for (std::size_t n = 0; n < cfg.links(); ++n) {
    double a = liouville_log_argument(cfg, n);
    if (!(a > 0.0)) throw DomainError("Liouville log argument is not positive");
    h.push_back(std::log(a));
  }
  return h;
}

double liouville_kappa4_coefficient(const FieldConfig& cfg, std::size_t n) {
  // f(t) = A + B t + C t^2 with t = kappa^2; second difference at t = 0, 1, 2 gives 2C.
  FieldConfig c = cfg;
  double f[3];
  for (int t = 0; t < 3; ++t) {
    c.kappa = std::sqrt(static_cast<double>(t));
    f[t] = liouville_log_argument(c, n);
  }
  return 0.5 * (f[2] - 2.0 * f[1] + f[0]);
}

std::pair<double, double> volterra_s(const FieldConfig& c, std::size_t n) {
  const std::size_t m = next(c, n);
  const double mean = 0.5 * (c.pi[n] + c.pi[m]), d = c.phi[m] - c.phi[n];
  return {mean + d, mean - d};
}

std::vector<double> h_volterra(const FieldConfig& cfg, bool dual, const RPrime& rprime) {
  cfg.validate();
  std::vector<double> h;
  for (std::size_t n = 0; n < cfg.links(); ++n) {
    auto [sp, sm] = volterra_s(cfg, n);
    if (dual) std::swap(sp, sm);
    h.push_back(std::log(std::cosh(sp)) + rprime(std::exp(2.0 * sm)));
  }
  return h;
}

std::vector<double> h_freefield(const FieldConfig& cfg) {
  cfg.validate();
  std::vector<double> h;
  for (std::size_t n = 0; n < cfg.links(); ++n) {
    const std::size_t m = next(cfg, n);
    h.push_back(2.0 * std::log(2.0 * std::cosh(0.25 * cfg.beta * (cfg.pi[n] + cfg.pi[m])) +
                               2.0 * std::cosh(0.5 * cfg.beta * (cfg.phi[m] - cfg.phi[n]))));
  }
  return h;
}

std::vector<double> h_toda(const FieldConfig& cfg) {
  cfg.validate();
  const double b = cfg.beta, k = cfg.kappa;
  auto u = [&](std::size_t n) { return std::exp(0.25 * b * cfg.pi[n]) / k; };
  auto ut = [&](std::size_t n) { return std::exp(-0.25 * b * cfg.pi[n]) / k; };
  auto v = [&](std::size_t n) { return std::exp(-0.5 * b * cfg.phi[n]); };
  std::vector<double> h;
  for (std::size_t n = 0; n < cfg.links(); ++n) {
    const std::size_t m = next(cfg, n);
    h.push_back(std::log(ut(n) * u(m) * v(m) / v(n)));
  }
  return h;
}

std::string_view continuum_model_name(ContinuumModel m) {
  switch (m) {
    case ContinuumModel::liouville: return "liouville";
    case ContinuumModel::freefield_volterra: return "freefield_volterra";
    case ContinuumModel::freefield_liouvillelimit: return "freefield_liouvillelimit";
  }
  return "?";
}

ContinuumModel continuum_model_from_name(std::string_view name) {
  for (auto m : {ContinuumModel::liouville, ContinuumModel::freefield_volterra, ContinuumModel::freefield_liouvillelimit})
    if (continuum_model_name(m) == name) return m;
  throw ConfigError("unknown continuum model '" + std::string(name) + "'");
}

std::string_view field_preset_name(FieldPreset p) {
  switch (p) {
    case FieldPreset::sine: return "sine";
    case FieldPreset::mixed: return "mixed";
    case FieldPreset::zero: return "zero";
  }
  return "?";
}

FieldPreset field_preset_from_name(std::string_view name) {
  for (auto p : {FieldPreset::sine, FieldPreset::mixed, FieldPreset::zero})
    if (field_preset_name(p) == name) return p;
  throw ConfigError("unknown field preset '" + std::string(name) + "'");
}

namespace {
struct Smooth {
  FieldPreset p;
  double L;
  double phi(double x) const {
    const double w = kTwoPi / L;
    switch (p) {
      case FieldPreset::sine: return 0.3 * std::sin(w * x);
      case FieldPreset::mixed: return 0.3 * std::sin(w * x) + 0.1 * std::cos(2 * w * x);
      case FieldPreset::zero: return 0.0;
    }
    return 0.0;
  }
  double dphi(double x) const {
    const double w = kTwoPi / L;
    switch (p) {
      case FieldPreset::sine: return 0.3 * w * std::cos(w * x);
      case FieldPreset::mixed: return 0.3 * w * std::cos(w * x) - 0.2 * w * std::sin(2 * w * x);
      case FieldPreset::zero: return 0.0;
    }
    return 0.0;
  }
  double pi(double x) const { return p == FieldPreset::mixed ? 0.5 * std::cos(kTwoPi * x / L) : 0.0; }
};

double density(ContinuumModel m, const Smooth& f, double x, double beta) {
  const double gamma = beta * beta / 8.0, P = f.pi(x), D = f.dphi(x);
  switch (m) {
    case ContinuumModel::liouville: return 0.5 * P * P + 0.5 * D * D + std::exp(-beta * f.phi(x)) / gamma;
    case ContinuumModel::freefield_volterra: return (P * P + D * D) / gamma;
    case ContinuumModel::freefield_liouvillelimit: return P * P + D * D;
  }
  return 0.0;
}

double lattice_sum(ContinuumModel m, const FieldConfig& c) {
  std::vector<double> h;
  switch (m) {
    case ContinuumModel::liouville: h = h_liouville(c); break;
    case ContinuumModel::freefield_volterra: h = h_volterra(c, false, kSelfDualRPrime); break;
    case ContinuumModel::freefield_liouvillelimit: h = h_freefield(c); break;
  }
  double s = 0.0;
  for (double v : h) s += v;
  return s / c.gamma() / c.kappa;
}
}  // namespace

FieldConfig sample_fields(FieldPreset p, double length, int sites, double beta) {
  Smooth f{p, length};
  FieldConfig c;
  c.kappa = length / sites;
  c.beta = beta;
  for (int n = 0; n < sites; ++n) {
    const double x = n * c.kappa;
    c.phi.push_back(f.phi(x));
    c.pi.push_back(c.kappa * f.pi(x));
  }
  return c;
}

ContinuumReport continuum_check(ContinuumModel model, const std::vector<double>& kappas, FieldPreset field,
                                double beta, double length, bool parallel) {
  if (kappas.size() < 2) throw DomainError("continuum check needs at least two spacings");
  ContinuumReport r{model, field, length, 0.0, 0.0, 0.0, true, {}};
  Smooth f{field, length};
  r.integral = boost::math::quadrature::trapezoidal([&](double x) { return density(model, f, x, beta); }, 0.0, length,
                                                    1e-14);
  r.rows.resize(kappas.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    const int sites = std::max(2, static_cast<int>(std::lround(length / kappas[i])));
    FieldConfig c = sample_fields(field, length, sites, beta);
    r.rows[i] = {c.kappa, sites, lattice_sum(model, c), 0.0};
  }
  // D = lattice - integral ~ C sites / kappa + A kappa^2, fitted jointly; only C is removed.
  double s11 = 0.0, s12 = 0.0, s22 = 0.0, t1 = 0.0, t2 = 0.0;
  for (const auto& row : r.rows) {
    const double w = row.sites / row.kappa, k2 = row.kappa * row.kappa, d = row.lattice - r.integral;
    s11 += w * w;
    s12 += w * k2;
    s22 += k2 * k2;
    t1 += w * d;
    t2 += k2 * d;
  }
  const double det = s11 * s22 - s12 * s12;
  r.fitted_constant = r.rows.size() > 2 && det != 0.0 ? (t1 * s22 - t2 * s12) / det : t1 / s11;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    auto& row = r.rows[i];
    row.error = std::abs(row.lattice - r.fitted_constant * row.sites / row.kappa - r.integral);
    if (i > 0 && row.error > r.rows[i - 1].error) r.monotone = false;
    const double x = std::log(row.kappa), y = std::log(std::max(row.error, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(r.rows.size());
  r.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return r;
}

std::string format_report(const ContinuumReport& r) {
  std::ostringstream os;
  os << "model " << continuum_model_name(r.model) << ", field " << field_preset_name(r.field) << ", L = " << r.length
     << "\nintegral " << fmt(r.integral) << ", fitted per-link constant " << fmt(r.fitted_constant) << "\n";
  os << "kappa      sites  error      order\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    os << fmt(row.kappa) << "\t" << row.sites << "\t" << fmt(row.error);
    if (i > 0) os << "\t" << fmt(std::log(r.rows[i - 1].error / row.error) / std::log(r.rows[i - 1].kappa / row.kappa));
    os << "\n";
  }
  os << "fitted order " << fmt(r.order) << (r.monotone ? "" : " (refinement not monotone)") << "\n";
  return os.str();
}

CheckResult zc_check() {
  std::size_t left = 0, before = 0;
  std::string detail;
  for (ZcPreset p : {ZcPreset::liouville, ZcPreset::volterra_freefield, ZcPreset::liouville_freefield}) {
    ZcResult z = zc_residual(p);
    left += z.reduced_terms();
    before += z.residual_terms();
    detail += std::string(zc_preset_name(p)) + ": " + std::to_string(z.residual_terms()) + " -> " +
              std::to_string(z.reduced_terms()) + " terms; ";
  }
  CheckResult r = symbolic_result(left, detail + "residual before the equation of motion has " +
                                            std::to_string(before) + " terms");
  return r;
}

CheckResult continuum_order_check(ContinuumModel model, double min_order) {
  const double k0 = 1.0 / 16;
  double worst = 1e300;
  std::string detail;
  for (FieldPreset f : {FieldPreset::sine, FieldPreset::mixed}) {
    ContinuumReport r = continuum_check(model, {k0, k0 / 2, k0 / 4, k0 / 8}, f);
    worst = std::min(worst, r.order);
    detail += std::string(field_preset_name(f)) + ": order " + fmt(r.order) + ", constant " + fmt(r.fitted_constant) +
              "; ";
  }
  CheckResult res;
  res.residual_kind = "order";
  res.residual = worst;
  res.tolerance = min_order;
  res.status = worst >= min_order ? Status::pass : Status::fail;
  res.detail = detail;
  return res;
}

CheckResult volterra_duality_check(std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    FieldConfig c = random_config(rng, 8), flipped = c;
    for (double& v : flipped.phi) v = -v;
    for (const RPrime* rp : {&kTrivialRPrime, &kSelfDualRPrime}) {
      auto a = h_volterra(c, true, *rp), b = h_volterra(flipped, false, *rp);
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    }
  }
  return numeric_result(worst, tol, "dual(phi) vs primal(-phi), 20 random configurations, both r'");
}

CheckResult volterra_selfdual_check(std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    FieldConfig c = random_config(rng, 8);
    auto h = h_volterra(c, false, kSelfDualRPrime);
    for (std::size_t n = 0; n < h.size(); ++n) {
      auto [sp, sm] = volterra_s(c, n);
      worst = std::max(worst, std::abs(h[n] - std::log(std::cosh(sp)) - std::log(std::cosh(sm))));
    }
  }
  return numeric_result(worst, tol, "self-dual r' against log cosh s+ + log cosh s-");
}

CheckResult toda_trivial_check(std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    FieldConfig c = random_config(rng, 9);
    auto h = h_toda(c);
    double s = 0.0;
    for (double v : h) s += v;
    // Sum telescopes to sites * log Z_q, Z_q = kappa^-2.
    worst = std::max(worst, std::abs(s - static_cast<double>(h.size()) * std::log(1.0 / (c.kappa * c.kappa))));
  }
  return numeric_result(worst, tol, "periodic sum against N log Z_q, 20 random configurations");
}

CheckResult liouville_kappa4_check(std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    FieldConfig c = random_config(rng, 4);
    for (std::size_t n = 0; n < c.links(); ++n) {
      const std::size_t m = (n + 1) % c.phi.size();
      double expect = 0.25 * std::exp(0.25 * c.beta * (c.pi[n] + c.pi[m])) * std::exp(-c.beta * (c.phi[n] + c.phi[m]));
      worst = std::max(worst, std::abs(liouville_kappa4_coefficient(c, n) - expect) / expect);
    }
  }
  return numeric_result(worst, tol, "kappa^4 coefficient of the log argument, relative");
}

}  // namespace qbax
