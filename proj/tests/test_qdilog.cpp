#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qbax/error.hpp"
#include "qbax/qdilog.hpp"

using namespace qbax;

namespace {

// exp of the contour integral of e^{-itz/(pi w)} / (4 t sinh(w t) sinh(t/w)) along Im t = 0.05,
// evaluated with mpmath at 30 digits.
struct Reference {
  double omega;
  cplx z;
  cplx value;
};
const Reference kReference[] = {
    {0.5, {0.3, 0.0}, {0.759363519865118689, 0.650666615632043546}},
    {0.7, {0.7, 0.2}, {0.790124296859233033, 0.482962894193513142}},
    {0.9, {-1.1, 0.0}, {0.992487015562062352, 0.122350005887660680}},
};

DilogParams at(double omega) {
  DilogParams p;
  p.omega = omega;
  return p;
}

}  // namespace

TEST_CASE("agrees with an independent high-precision quadrature") {
  for (const auto& r : kReference) CHECK(std::abs(s_omega_log(r.z, at(r.omega)) - r.value) < 1e-12);
}

TEST_CASE("difference equation checked directly") {
  for (double w : {0.4, 0.8}) {
    DilogParams p = at(w);
    const double h = M_PI * w * w;  // q = e^{i h}
    for (double lx : {-1.0, 0.0, 0.7}) {
      cplx lhs = s_omega_log(cplx(lx, -h), p), rhs = (1.0 + std::exp(lx)) * s_omega_log(cplx(lx, h), p);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("inversion, unitarity and self-duality") {
  const double w = 0.6;
  DilogParams p = at(w);
  for (double z : {-2.0, -0.3, 0.0, 0.5, 1.7}) {
    // Only the half residue at t = 0 survives in log S(e^z) + log S(e^-z).
    cplx expect = std::exp(cplx(0.0, M_PI) * (z * z / (4 * M_PI * M_PI * w * w) + (w * w + 1 / (w * w)) / 12));
    CHECK(std::abs(s_omega_log(z, p) * s_omega_log(-z, p) - expect) < 1e-12);
    CHECK(std::abs(std::abs(s_omega_log(z, p)) - 1.0) < 1e-12);
    // omega -> 1/omega leaves the integrand fixed when z scales by 1/omega^2.
    CHECK(std::abs(log_s_omega(z, cplx(w), p) - log_s_omega(z / (w * w), cplx(1 / w), p)) < 1e-10);
  }
}

TEST_CASE("compact product formula for Im omega^2 > 0") {
  cplx omega = std::sqrt(cplx(0.5, 0.2));
  DilogParams p;
  for (cplx z : {cplx(0.0), cplx(0.4, 0.1), cplx(-0.6)}) {
    cplx integral = std::exp(log_s_omega(z, omega, p));
    CHECK(std::abs(integral - s_double_product(z, omega)) < 1e-9);
  }
}

TEST_CASE("decay strip is enforced") {
  DilogParams p = at(0.5);
  const double strip = decay_strip(0.5);
  CHECK(strip > 0.0);
  CHECK_NOTHROW(log_s_omega(cplx(0.0, 0.9 * strip), p));
  CHECK_THROWS_AS(log_s_omega(cplx(0.0, 1.1 * strip), p), DomainError);
}

TEST_CASE("serial and parallel quadrature are bitwise equal") {
  DilogParams p = at(0.7);
  for (double lx : {-1.0, 0.2, 2.5}) CHECK(log_s_omega(lx, p) == log_s_omega_serial(lx, p));
}

TEST_CASE("functional equations and sampled checks") {
  CHECK(difference_grid_check().passed());
  CHECK(unitarity_grid_check().passed());
  CHECK(spectral_sample_check(5, 10).passed());
  for (FeqId f : {FeqId::volterra, FeqId::freefield, FeqId::reduction}) {
    CHECK(feq_defect(f, 0.6, 1.4, 0.8) < 1e-9);
    CHECK(feq_from_name(feq_name(f)) == f);
  }
  CHECK(ratio_spread(0.6, 1.3, {0.5, 1.0, 2.0}) < 1e-8);
  CHECK_THROWS_AS(feq_from_name("nope"), ConfigError);
  CHECK(spectral_sample_check(5, 10).residual == spectral_sample_check(5, 10).residual);
}
