#include "qbax/qdilog.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qbax/error.hpp"

namespace qbax {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
using GL = boost::math::quadrature::gauss<double, 20>;

// Apply a rule on [lo, hi] to a complex integrand.
template <class F>
cplx gauss_panel(F&& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  const auto& x = GL::abscissa();
  const auto& w = GL::weights();
  cplx s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += w[k] * (f(c + h * x[k]) + f(c - h * x[k]));
  return h * s;
}

struct Integrand {
  cplx omega, a;  // a = z / (pi omega)
  // (f(t) + f(-t)) on the real axis: -i sin(t a) / (2 t sinh(omega t) sinh(t/omega)).
  cplx real_axis(double t) const {
    cplx A = omega * t, B = t / omega;
    cplx e1 = std::exp(kI * t * a - A - B), e2 = std::exp(-kI * t * a - A - B);
    cplx den = (1.0 - std::exp(-2.0 * A)) * (1.0 - std::exp(-2.0 * B));
    // sin(ta) 4 e^{-A-B} = (e1 - e2) 2/i
    return -kI * (4.0 * (e1 - e2) / (2.0 * kI)) / (2.0 * t * den);
  }
  // d phi integrand of the semicircle t = r e^{i phi}, traversed from phi = pi to 0.
  cplx arc(double r, double phi) const {
    cplx t = r * std::exp(kI * phi);
    return -0.25 * kI * std::exp(-kI * t * a) / (std::sinh(omega * t) * std::sinh(t / omega));
  }
};

cplx panel_sum(const Integrand& g, double lo, double hi, int n, bool parallel) {
  const double h = (hi - lo) / n;
  std::vector<cplx> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < n; ++k)
    parts[static_cast<std::size_t>(k)] =
        gauss_panel([&](double t) { return g.real_axis(t); }, lo + k * h, lo + (k + 1) * h);
  cplx s = 0.0;
  for (const auto& v : parts) s += v;  // fixed order: parallel and serial agree bitwise
  return s;
}

cplx log_s_impl(cplx z, cplx omega, const DilogParams& p, bool parallel) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("s_omega: argument is 0 or not finite");
  const Integrand g{omega, z / (kPi * omega)};
  const double rate = (omega + 1.0 / omega).real() - std::abs(g.a.imag());
  if (rate <= 1e-3) {
    std::ostringstream os;
    os << "s_omega: |Im log x| = " << std::abs(z.imag()) << " outside the decay strip";
    throw DomainError(os.str());
  }
  const double r = p.pole_radius;
  const double T = p.truncation > 0 ? p.truncation : std::max(4.0, 40.0 / rate);

  cplx arc = 0.0;
  for (int k = 0; k < 4; ++k) arc += gauss_panel([&](double phi) { return g.arc(r, phi); }, k * kPi / 4, (k + 1) * kPi / 4);

  const double density = std::max<double>(p.panels_per_unit, std::abs(g.a.real()) + std::abs(g.a.imag()));
  int n = std::max(4, static_cast<int>(std::ceil((T - r) * density)));
  cplx coarse = panel_sum(g, r, T, n, parallel);
  for (int refine = 0; refine < 5; ++refine) {
    n *= 2;
    cplx fine = panel_sum(g, r, T, n, parallel);
    if (std::abs(fine - coarse) <= p.tolerance * (1.0 + std::abs(fine))) return arc + fine;
    coarse = fine;
  }
  throw AccuracyError("s_omega: quadrature refinements disagree");
}

void check_omega(double omega) {
  if (!(omega > 0.0 && omega < 1.0)) throw DomainError("omega must lie in (0,1)");
}

DilogParams with_omega(const DilogParams& base, double omega) {
  check_omega(omega);
  DilogParams p = base;
  p.omega = omega;
  return p;
}

cplx S(cplx z, const DilogParams& p) { return std::exp(log_s_omega(z, p)); }

double rel(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// Track the worst defect over a sweep.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (v > value || where.empty()) {
      value = v;
      where = at;
    }
  }
};

}  // namespace

cplx q_of(double omega) { return std::exp(kI * kPi * omega * omega); }
cplx q_of(cplx omega) { return std::exp(kI * kPi * omega * omega); }

cplx s_compact(cplx x, cplx q, double tol) {
  const double aq = std::abs(q);
  if (aq >= 1.0) throw DomainError("s_compact needs |q| < 1");
  cplx prod = 1.0, qn = q;  // q^{2n-1}
  const cplx q2 = q * q;
  const double ax = std::abs(x);
  for (int n = 1; n < 1000000; ++n) {
    prod *= 1.0 + x * qn;
    if (ax * std::abs(qn) * aq * aq / (1.0 - aq * aq) < tol) return prod;
    qn *= q2;
  }
  throw AccuracyError("s_compact: product did not converge");
}

double decay_strip(double omega) { return kPi * (1.0 + omega * omega); }

cplx log_s_omega(cplx z, const DilogParams& p) {
  check_omega(p.omega);
  return log_s_impl(z, p.omega, p, p.parallel);
}

cplx log_s_omega(cplx z, cplx omega, const DilogParams& p) { return log_s_impl(z, omega, p, p.parallel); }

cplx log_s_omega_serial(cplx z, const DilogParams& p) {
  check_omega(p.omega);
  return log_s_impl(z, p.omega, p, false);
}

cplx s_omega_log(cplx z, const DilogParams& p) { return std::exp(log_s_omega(z, p)); }

cplx s_omega(cplx x, const DilogParams& p) {
  if (x == 0.0) throw DomainError("s_omega: log of 0");
  if (x.real() < 0 && x.imag() == 0.0) throw DomainError("s_omega: x on the branch cut");
  return s_omega_log(std::log(x), p);
}

cplx s_double_product(cplx z, cplx omega, double tol) {
  const cplx w2 = omega * omega;
  const cplx q = std::exp(kI * kPi * w2), qhat = std::exp(-kI * kPi / w2);
  return s_compact(std::exp(z), q, tol) / s_compact(std::exp(z / w2), qhat, tol);
}

cplx r0_prime(cplx log_w, double lam, const DilogParams& p) {
  const double ll = std::log(lam), w2 = p.omega * p.omega;
  return S(log_w - ll, p) / S(log_w + ll, p) * std::exp(-log_w * ll / (2.0 * kI * kPi * w2));
}

cplx r_check_pp(cplx log_w, double lam, const DilogParams& p) {
  const double ll = std::log(lam), w2 = p.omega * p.omega;
  return S(log_w - 2.0 * ll, p) / S(log_w + 2.0 * ll, p) * std::exp(-log_w * ll / (kI * kPi * w2));
}

cplx g_ratio(cplx log_f, double lam, const DilogParams& p) {
  const double ll = std::log(lam);
  return S(log_f - ll, p) / S(log_f + ll, p);
}

cplx r0_tilde(cplx log_w, double lam, const DilogParams& p) {
  const double ll = std::log(lam);
  return S(log_w, p) * S(-log_w, p) / (S(log_w + ll, p) * S(-log_w + ll, p));
}

double difference_defect(double omega, double x, const DilogParams& base) {
  DilogParams p = with_omega(base, omega);
  if (x == 0.0) return 0.0;
  if (x < 0.0) throw DomainError("difference equation: x must be positive");
  const cplx z = std::log(x), shift = kI * kPi * omega * omega;
  cplx lhs = S(z - shift, p), rhs = (1.0 + x) * S(z + shift, p);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

double unitarity_defect(double omega, double x, const DilogParams& base) {
  DilogParams p = with_omega(base, omega);
  if (x <= 0.0) throw DomainError("unitarity holds for positive x");
  return std::abs(std::abs(S(std::log(x), p)) - 1.0);
}

double spectral_defect(double omega, double w, double t, const DilogParams& base) {
  DilogParams p = with_omega(base, omega);
  if (w <= 0.0) throw DomainError("spectral equation: w must be positive");
  const double lw = std::log(w);
  const cplx s = kI * kPi * omega * omega * t;  // log q^t
  const cplx wt = std::exp(t * lw);
  cplx first = S(lw - s, p) * S(-lw + s, p) / (S(lw + s, p) * S(-lw - s, p));
  cplx second = std::exp(s * t) * S(lw - 2.0 * s, p) * S(-lw + 2.0 * s, p) / (S(lw, p) * S(-lw, p));
  return std::max(rel(wt, first), rel(wt, second));
}

std::string_view feq_name(FeqId id) {
  switch (id) {
    case FeqId::volterra: return "volterra";
    case FeqId::freefield: return "freefield";
    case FeqId::reduction: return "reduction";
  }
  return "?";
}

FeqId feq_from_name(std::string_view name) {
  for (FeqId id : {FeqId::volterra, FeqId::freefield, FeqId::reduction})
    if (feq_name(id) == name) return id;
  throw ConfigError("unknown functional equation '" + std::string(name) + "'");
}

double feq_defect(FeqId id, double omega, double lam, double w, const DilogParams& base) {
  DilogParams p = with_omega(base, omega);
  if (lam <= 0.0 || w <= 0.0) throw DomainError("functional equations take positive lambda and w");
  const double lw = std::log(w);
  const cplx q = q_of(omega), qinv = 1.0 / q, shift2 = 2.0 * kI * kPi * omega * omega;
  switch (id) {
    case FeqId::volterra: {
      cplx lhs = r0_prime(lw, lam, p) * (lam + qinv * w);
      cplx rhs = (1.0 + lam * qinv * w) * r0_prime(lw - shift2, lam, p);
      return rel(lhs, rhs);
    }
    case FeqId::freefield: {
      cplx lhs = r_check_pp(lw, lam, p) * (lam * q / w + 1.0 / lam);
      cplx rhs = (q / (lam * w) + lam) * r_check_pp(lw - shift2, lam, p);
      return rel(lhs, rhs);
    }
    case FeqId::reduction: {
      cplx lhs = g_ratio(lw, lam, p) * (lam + qinv / w);
      cplx rhs = (1.0 / lam + qinv / w) * g_ratio(lw + shift2, lam, p);
      return rel(lhs, rhs);
    }
  }
  return 0.0;
}

double ratio_spread(double omega, double lam, const std::vector<double>& w_grid, const DilogParams& base) {
  DilogParams p = with_omega(base, omega);
  std::vector<cplx> ratios;
  cplx mean = 0.0;
  for (double w : w_grid) {
    ratios.push_back(r0_prime(std::log(w), lam, p) / r0_tilde(std::log(w), lam, p));
    mean += ratios.back();
  }
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (const auto& r : ratios) spread = std::max(spread, std::abs(r - mean));
  return spread / std::abs(mean);
}

CheckResult check_difference(double omega, double x, double tol) {
  return numeric_result(difference_defect(omega, x), tol, "omega=" + fmt(omega) + " x=" + fmt(x));
}

CheckResult check_spectral(double omega, double w, double t, double tol) {
  return numeric_result(spectral_defect(omega, w, t), tol, "omega=" + fmt(omega) + " w=" + fmt(w) + " t=" + fmt(t));
}

CheckResult check_feq(FeqId id, double omega, double lam, double w, double tol) {
  return numeric_result(feq_defect(id, omega, lam, w), tol,
                        std::string(feq_name(id)) + " omega=" + fmt(omega) + " lambda=" + fmt(lam) + " w=" + fmt(w));
}

std::vector<double> x_log_grid(int n) {
  std::vector<double> xs;
  for (int k = 0; k < n; ++k) xs.push_back(std::pow(10.0, -2.0 + 4.0 * k / (n - 1)));
  return xs;
}

CheckResult difference_grid_check(double tol) {
  Worst w;
  for (double om : kOmegaGrid)
    for (double x : x_log_grid()) w.update(difference_defect(om, x), "omega=" + fmt(om) + " x=" + fmt(x));
  return numeric_result(w.value, tol, "worst at " + w.where);
}

CheckResult unitarity_grid_check(double tol) {
  Worst w;
  for (double om : kOmegaGrid)
    for (double x : x_log_grid()) w.update(unitarity_defect(om, x), "omega=" + fmt(om) + " x=" + fmt(x));
  return numeric_result(w.value, tol, "worst at " + w.where);
}

namespace {
struct Sample {
  double lam, w, t;
};
std::vector<Sample> draw(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(std::log(0.25), std::log(4.0)), tu(-0.5, 0.5);
  std::vector<Sample> s;
  for (int k = 0; k < n; ++k) {
    double lam = std::exp(logu(rng)), w = std::exp(logu(rng)), t = tu(rng);
    s.push_back({lam, w, t});
  }
  return s;
}
}  // namespace

CheckResult spectral_sample_check(std::uint64_t seed, int samples, double tol) {
  Worst worst;
  for (double om : kOmegaGrid)
    for (const auto& s : draw(seed, samples))
      worst.update(spectral_defect(om, s.w, s.t), "omega=" + fmt(om) + " w=" + fmt(s.w) + " t=" + fmt(s.t));
  return numeric_result(worst.value, tol,
                        std::to_string(samples) + " samples per omega, worst at " + worst.where);
}

CheckResult feq_sample_check(FeqId id, std::uint64_t seed, int samples, double tol) {
  Worst worst;
  for (double om : kOmegaGrid)
    for (const auto& s : draw(seed, samples))
      worst.update(feq_defect(id, om, s.lam, s.w),
                   "omega=" + fmt(om) + " lambda=" + fmt(s.lam) + " w=" + fmt(s.w));
  return numeric_result(worst.value, tol,
                        std::to_string(samples) + " samples per omega, worst at " + worst.where);
}

CheckResult ratio_spread_check(double tol) {
  const std::vector<double> grid = {0.3, 0.6, 1.0, 1.7, 3.1};
  Worst worst;
  for (double om : kOmegaGrid)
    for (double lam : {0.5, 1.7, 2.9}) worst.update(ratio_spread(om, lam, grid), "omega=" + fmt(om) + " lambda=" + fmt(lam));
  return numeric_result(worst.value, tol, "worst at " + worst.where);
}

CheckResult compact_consistency_check(double tol) {
  Worst worst;
  DilogParams p;
  for (cplx w2 : {cplx(0.5, 0.2), cplx(0.3, 0.15), cplx(0.7, 0.25)}) {
    cplx om = std::sqrt(w2);
    for (cplx z : {cplx(-0.7, 0.0), cplx(0.0, 0.0), cplx(0.9, 0.3)}) {
      cplx integral = std::exp(log_s_omega(z, om, p));
      worst.update(rel(s_double_product(z, om), integral),
                   "omega^2=" + fmt(w2.real()) + "+" + fmt(w2.imag()) + "i log x=" + fmt(z.real()));
    }
  }
  return numeric_result(worst.value, tol, "integral vs double product, worst at " + worst.where);
}

CheckResult self_duality_check(double tol) {
  Worst worst;
  DilogParams p;
  for (double om : kOmegaGrid)
    for (double s : {-0.4, 0.1, 0.55}) {
      cplx lhs = std::exp(log_s_omega(cplx(2 * kPi * om * s), cplx(om), p));
      cplx rhs = std::exp(log_s_omega(cplx(2 * kPi * s / om), cplx(1.0 / om), p));
      worst.update(rel(lhs, rhs), "omega=" + fmt(om) + " s=" + fmt(s));
    }
  return numeric_result(worst.value, tol, "worst at " + worst.where);
}

CheckResult parallel_consistency_check(double tol) {
  Worst worst;
  for (double om : kOmegaGrid) {
    DilogParams p;
    p.omega = om;
    for (double x : {0.1, 1.0, 7.3}) {
      cplx a = log_s_omega(std::log(x), p), b = log_s_omega_serial(std::log(x), p);
      worst.update(std::abs(a - b), "omega=" + fmt(om) + " x=" + fmt(x));
    }
  }
  return numeric_result(worst.value, tol, "worst at " + worst.where);
}

}  // namespace qbax
