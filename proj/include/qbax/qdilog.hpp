#pragma once
// Noncompact quantum dilogarithm S_omega and its scalar functional equations.
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbax/check.hpp"

namespace qbax {

using cplx = std::complex<double>;

struct DilogParams {
  double omega = 0.5;
  /// Upper cut of the real-axis integral; 0 picks T from the decay rate.
  double truncation = 0.0;
  /// Initial Gauss-Legendre panels per unit length (20 nodes each).
  int panels_per_unit = 2;
  double pole_radius = 0.1;
  /// Agreement required between a quadrature and its panel-doubled refinement.
  double tolerance = 1e-12;
  /// Use the OpenMP panel sum.
  bool parallel = true;
};

/// q = exp(i pi omega^2).
cplx q_of(double omega);
cplx q_of(cplx omega);

/// prod_{n>=1} (1 + x q^{2n-1}), |q| < 1.
cplx s_compact(cplx x, cplx q, double tol = 1e-15);

/// Bound on |Im log x| for which the integrand decays: pi Re(1 + omega^2).
double decay_strip(double omega);

/// log S_omega(e^z). z carries the branch, so q^k x is z + i pi omega^2 k.
cplx log_s_omega(cplx z, const DilogParams& p);
/// Complex omega with Im omega^2 > 0, where the double product also converges.
cplx log_s_omega(cplx z, cplx omega, const DilogParams& p);
cplx s_omega(cplx x, const DilogParams& p);
cplx s_omega_log(cplx z, const DilogParams& p);

/// Same quadrature with a serial panel sum.
cplx log_s_omega_serial(cplx z, const DilogParams& p);

/// prod (1 + x q^{2n-1}) / (1 + x^{omega^-2} qhat^{2n-1}), qhat = exp(-i pi / omega^2).
cplx s_double_product(cplx z, cplx omega, double tol = 1e-15);

// Scalar solutions built from S_omega, all of them evaluated from log arguments.
/// S(w/l) / S(l w) * w^{-(alpha/2) log l}, alpha = 1/log q.
cplx r0_prime(cplx log_w, double lam, const DilogParams& p);
/// S(w/l^2) / S(l^2 w) * w^{-alpha log l}.
cplx r_check_pp(cplx log_w, double lam, const DilogParams& p);
/// S(f/l) / S(l f).
cplx g_ratio(cplx log_f, double lam, const DilogParams& p);
/// S(w) S(1/w) / (S(l w) S(l/w)).
cplx r0_tilde(cplx log_w, double lam, const DilogParams& p);

/// |S(x/q) - (1+x) S(qx)| / |(1+x) S(qx)|.
double difference_defect(double omega, double x, const DilogParams& base = {});
double unitarity_defect(double omega, double x, const DilogParams& base = {});
/// Larger of the two relative defects of w^t against the dilogarithm ratios.
double spectral_defect(double omega, double w, double t, const DilogParams& base = {});

enum class FeqId { volterra, freefield, reduction };
std::string_view feq_name(FeqId id);
FeqId feq_from_name(std::string_view name);  // throws ConfigError
/// Relative defect of the functional equation at (lambda, w).
double feq_defect(FeqId id, double omega, double lam, double w, const DilogParams& base = {});
/// max/min spread of r0_prime / r0_tilde over the w grid, relative to its mean.
double ratio_spread(double omega, double lam, const std::vector<double>& w_grid, const DilogParams& base = {});

CheckResult check_difference(double omega, double x, double tol = 1e-8);
CheckResult check_spectral(double omega, double w, double t, double tol = 1e-8);
CheckResult check_feq(FeqId id, double omega, double lam, double w, double tol = 1e-8);

// Sweeps used by the registry and the acceptance run.
inline const std::vector<double> kOmegaGrid = {0.3, 0.5, 0.7, 0.9};
std::vector<double> x_log_grid(int n = 9);
CheckResult difference_grid_check(double tol = 1e-8);
CheckResult unitarity_grid_check(double tol = 1e-8);
/// 100 seeded (lambda, w, t) samples per omega.
CheckResult spectral_sample_check(std::uint64_t seed, int samples = 100, double tol = 1e-8);
CheckResult feq_sample_check(FeqId id, std::uint64_t seed, int samples = 100, double tol = 1e-8);
CheckResult ratio_spread_check(double tol = 1e-7);
CheckResult compact_consistency_check(double tol = 1e-6);
/// Self-duality S_omega(e^{2 pi omega s}) = S_{1/omega}(e^{2 pi s / omega}) through the symmetric integrand.
CheckResult self_duality_check(double tol = 1e-8);
/// Serial and parallel panel sums agree.
CheckResult parallel_consistency_check(double tol = 1e-13);

}  // namespace qbax
