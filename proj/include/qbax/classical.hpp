#pragma once
// Classical lattice Hamiltonians and their continuum limits.
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qbax/check.hpp"

namespace qbax {

struct FieldConfig {
  std::vector<double> phi;  // Phi_n (phi_n for Volterra)
  std::vector<double> pi;   // Pi_n (p_n for Volterra)
  double kappa = 0.1;
  double beta = 1.0;
  bool periodic = true;

  double gamma() const { return beta * beta / 8.0; }
  /// Throws DomainError on mismatched or too short arrays, kappa <= 0 or beta <= 0.
  void validate() const;
  std::size_t links() const;
};

/// Argument of the logarithm in gamma H for link (n, n+1).
double liouville_log_argument(const FieldConfig& cfg, std::size_t n);
/// gamma H^{L,cl}_{n,n+1} per link.
std::vector<double> h_liouville(const FieldConfig& cfg);
/// kappa^4 coefficient of the log argument, by exact quadratic interpolation in kappa^2.
double liouville_kappa4_coefficient(const FieldConfig& cfg, std::size_t n);

/// r'(y) in gamma H = log cosh s+ + r'(e^{2 s-}).
using RPrime = std::function<double(double)>;
inline const RPrime kTrivialRPrime = [](double) { return 0.0; };
/// r'(e^{2t}) = log cosh t.
inline const RPrime kSelfDualRPrime = [](double y) { return std::log(std::cosh(0.5 * std::log(y))); };

/// s+ and s- of link n: (p_n + p_{n+1})/2 +- (phi_{n+1} - phi_n).
std::pair<double, double> volterra_s(const FieldConfig& cfg, std::size_t n);
std::vector<double> h_volterra(const FieldConfig& cfg, bool dual, const RPrime& rprime = kTrivialRPrime);

/// 2 log(2 cosh(beta/4 (Pi_n + Pi_{n+1})) + 2 cosh(beta/2 (Phi_{n+1} - Phi_n))).
std::vector<double> h_freefield(const FieldConfig& cfg);

/// log(vinv_n ut_n u_{n+1} v_{n+1}) with u = e^{beta Pi/4}/kappa, ut = e^{-beta Pi/4}/kappa, v = e^{-beta Phi/2}.
std::vector<double> h_toda(const FieldConfig& cfg);

enum class ContinuumModel { liouville, freefield_volterra, freefield_liouvillelimit };
std::string_view continuum_model_name(ContinuumModel m);
ContinuumModel continuum_model_from_name(std::string_view name);  // throws ConfigError

enum class FieldPreset { sine, mixed, zero };
std::string_view field_preset_name(FieldPreset p);
FieldPreset field_preset_from_name(std::string_view name);

struct ContinuumRow {
  double kappa;
  int sites;
  double lattice;  // (1/kappa) sum_n H_n
  double error;    // |lattice - const * sites / kappa - integral|
};

struct ContinuumReport {
  ContinuumModel model;
  FieldPreset field;
  double length = 1.0;
  double integral = 0.0;
  double fitted_constant = 0.0;  // per-link, in units of H
  double order = 0.0;            // least-squares slope of log error vs log kappa
  bool monotone = true;
  std::vector<ContinuumRow> rows;
};

/// Lattice fields from smooth periodic ones: Phi_n = Phi(x_n), Pi_n = kappa Pi(x_n), x_n = n kappa.
FieldConfig sample_fields(FieldPreset p, double length, int sites, double beta);
/// Sweep over sites = length/kappa for each kappa; OpenMP across the sweep.
ContinuumReport continuum_check(ContinuumModel model, const std::vector<double>& kappas, FieldPreset field,
                                double beta = 1.0, double length = 1.0, bool parallel = true);
std::string format_report(const ContinuumReport& r);

CheckResult zc_check();
/// Order >= 1 over kappa, kappa/2, kappa/4, kappa/8.
CheckResult continuum_order_check(ContinuumModel model, double min_order = 1.0);
CheckResult volterra_duality_check(std::uint64_t seed, double tol = 1e-12);
/// Self-dual r' reproduces log cosh s+ + log cosh s-.
CheckResult volterra_selfdual_check(std::uint64_t seed, double tol = 1e-12);
CheckResult toda_trivial_check(std::uint64_t seed, double tol = 1e-12);
CheckResult liouville_kappa4_check(std::uint64_t seed, double tol = 1e-12);

}  // namespace qbax
