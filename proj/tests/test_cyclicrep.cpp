#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "qbax/cyclicrep.hpp"
#include "qbax/error.hpp"

using namespace qbax;

namespace {
double nrm(const CMat& m) { return m.norm(); }
}  // namespace

TEST_CASE("Weyl images obey the defining relations") {
  for (int N : {3, 5, 7}) {
    MatrixRep r = weyl_rep(N, 1, cplx(0.8, 0.3));
    const CMat &u = r.image("u"), &ut = r.image("ut"), &v = r.image("v"), &vi = r.image("vinv");
    const cplx q = r.q;
    CHECK(std::abs(std::pow(q, N) - 1.0) < 1e-12);
    CHECK(nrm(v * u - u * v / q) < 1e-12);
    CHECK(nrm(v * ut - q * ut * v) < 1e-12);
    CHECK(nrm(ut * u - u * ut) < 1e-12);
    CHECK(nrm(v * vi - CMat::Identity(N, N)) < 1e-12);
    CHECK(nrm(u * ut - r.z * CMat::Identity(N, N)) < 1e-12);
  }
}

TEST_CASE("q-oscillator images and the central value of C_q") {
  for (int N : {3, 5}) {
    const cplx c(0.7, 0.0);
    MatrixRep r = qosc_rep(N, 1, c);
    const CMat &e = r.image("e"), &f = r.image("f"), &k = r.image("k");
    const cplx q = r.q;
    CHECK(nrm(k * e - e * k / q) < 1e-12);
    CHECK(nrm(f * k - k * f / q) < 1e-12);
    CHECK(nrm(f * e - e * f + (q - 1.0 / q) * k * k) < 1e-12);
    CHECK(nrm(e * f - q * k * k - c * CMat::Identity(N, N)) < 1e-12);
  }
  CHECK(rep_relations_check().passed());
  const cplx q3 = weyl_rep(3, 1).q;
  CHECK_THROWS_AS(qosc_rep(3, 1, -q3), DomainError);
}

TEST_CASE("polynomial evaluation matches explicit matrix products") {
  MatrixRep r = weyl_rep(5, 2, cplx(1.1, -0.2));
  auto pres = build_presentation(AlgebraId::Wq);
  NCPoly p = Coefficient(2) * pres->word("u v") + Coefficient::q_pow(1) * pres->word("ut vinv");
  const CMat &u = r.image("u"), &ut = r.image("ut"), &v = r.image("v"), &vi = r.image("vinv");
  CHECK(nrm(evaluate(p, *pres, r, r.params()) - (2.0 * u * v + r.q * ut * vi)) < 1e-12);
  NCPoly two = free_mul(pres->word("u", 0), pres->word("v", 1));
  CMat expect = Eigen::kroneckerProduct(u, v).eval();
  CHECK(nrm(evaluate(two, *pres, r, r.params(), 2) - expect) < 1e-12);
}

TEST_CASE("numeric RLL: partners vanish, a wrong partner does not") {
  auto pts = unit_circle_points(3, 5);
  REQUIRE(pts.size() == 5);
  for (auto [l, m] : pts) {
    CHECK(std::abs(std::abs(l) - 1.0) < 1e-14);
    CHECK(std::abs(std::abs(m) - 1.0) < 1e-14);
  }
  MatrixRep w = weyl_rep(5, 1);
  MatrixRep a = qosc_rep(5, 1);
  auto [l, m] = pts.front();
  CHECK(rll_residual_num(RKind::R, LKind::gprime, w, l, m) < 1e-10);
  CHECK(rll_residual_num(RKind::Rhat, LKind::gpphat, w, l, m) < 1e-10);
  CHECK(rll_residual_num(RKind::R, LKind::LqDST, a, l, m) < 1e-10);
  CHECK(rll_residual_num(RKind::R, LKind::gpphat, w, l, m) > 1e-3);
  CHECK(rll_sweep(RKind::R, LKind::LA, a, pts, true) == rll_sweep(RKind::R, LKind::LA, a, pts, false));
  CHECK(rll_num_suite(3).passed());
  CHECK(rll_num_negative_control(3).passed());
}

TEST_CASE("numeric transfer matrices") {
  MatrixRep a = qosc_rep(3, 1);
  const cplx l = std::polar(1.0, 0.4), m = std::polar(1.0, -1.1);
  CHECK(transfer_commutator_num(LKind::LqDST, a, 3, l, m) < 1e-10);
  CMat T = transfer_matrix_num(LKind::LqDST, a, 2, l);
  CHECK(T.rows() == 9);
  CHECK_THROWS_AS(transfer_matrix_num(LKind::LqDST, qosc_rep(11, 1), 4, l), SizeError);
  CHECK(transfer_commutator_num_check(3).passed());
  CHECK(qdst_fit_check().passed());
}

TEST_CASE("rep_for picks the algebra of the L kind") {
  CHECK(rep_for(AlgebraId::Wq, 3).algebra == AlgebraId::Wq);
  CHECK(rep_for(AlgebraId::Aq, 3).algebra == AlgebraId::Aq);
  CHECK_THROWS_AS(weyl_rep(3, 1).image("e"), ConfigError);
}
