#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_rep.hpp"
#include "qbax/lmatrices.hpp"

using namespace qbax;
using namespace oracle;

namespace {

Mat kron(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

// Trigonometric six-vertex R(l) written out by hand.
Mat r_hand(C q, C l) {
  C a = q * l - 1.0 / (q * l), b = l - 1.0 / l, c = q - 1.0 / q;
  Mat R = Mat::Zero(4, 4);
  R(0, 0) = R(3, 3) = a;
  R(1, 1) = R(2, 2) = b;
  R(1, 2) = R(2, 1) = c;
  return R;
}

Mat scalar_matrix(const OpMatrix& m, const ParamValues& v) {
  Mat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).constant_term().evaluate(v);
  return out;
}

ParamValues point(C q, C l) {
  ParamValues v = default_param_values();
  v[static_cast<std::size_t>(Param::q)] = q;
  v[static_cast<std::size_t>(Param::lambda)] = l;
  return v;
}

// 2N x 2N block matrix of an L-matrix in the oracle representation, aux index outer.
Mat l_block(LKind kind, AlgebraId alg, const std::map<std::string, Mat>& img, C lam) {
  auto pres = build_presentation(alg);
  OpMatrix L = build_L(kind, *pres);
  ParamValues v = point(kQ, lam);
  Mat out = Mat::Zero(2 * kN, 2 * kN);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat e = Mat::Zero(kN, kN);
      for (const auto& [w, c] : L(i, j).terms()) {
        Mat m = Mat::Identity(kN, kN);
        for (const auto& l : w) m = m * img.at(pres->generator_name(l.gen));
        e += c.evaluate(v) * m;
      }
      out.block(i * kN, j * kN, kN, kN) = e;
    }
  return out;
}

double rll_numeric(const Mat& R, const Mat& L13, const Mat& L23) {
  // Spaces ordered aux1, aux2, quantum.
  Mat R12 = kron(R, Mat::Identity(kN, kN));
  Mat A = Mat::Zero(4 * kN, 4 * kN), B = Mat::Zero(4 * kN, 4 * kN);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        A.block((2 * i + k) * kN, (2 * j + k) * kN, kN, kN) = L13.block(i * kN, j * kN, kN, kN);
        B.block((2 * k + i) * kN, (2 * k + j) * kN, kN, kN) = L23.block(i * kN, j * kN, kN, kN);
      }
  return (R12 * A * B - B * A * R12).norm() / (R12 * A * B).norm();
}

}  // namespace

TEST_CASE("R(l) matches the hand formula and solves Yang-Baxter numerically") {
  const C q(0.8, 0.6), l(1.3, -0.2), m(0.7, 0.5);
  Mat R = scalar_matrix(build_R(RKind::R), point(q, l));
  CHECK((R - r_hand(q, l)).norm() < 1e-12);
  Mat I2 = Mat::Identity(2, 2), P = scalar_matrix(build_R(RKind::P), point(q, l));
  Mat R12l = kron(r_hand(q, l), I2), R23m = kron(I2, r_hand(q, m));
  Mat R13lm = kron(I2, P) * kron(r_hand(q, l * m), I2) * kron(I2, P);
  CHECK((R12l * R13lm * R23m - R23m * R13lm * R12l).norm() < 1e-10);
  CHECK(ybe_residual(RKind::R).is_zero());
  CHECK(ybe_residual(RKind::Rhat).is_zero());
}

TEST_CASE("Hecke relation of P R+ numerically") {
  const C q(1.1, 0.3);
  ParamValues v = point(q, 1.0);
  Mat PR = scalar_matrix(build_R(RKind::P), v) * scalar_matrix(build_R(RKind::Rplus), v);
  Mat I = Mat::Identity(4, 4);
  CHECK(((PR - q * I) * (PR + I / q)).norm() < 1e-12);
  CHECK(hecke_check().passed());
  CHECK(flip_symmetry_check().passed());
  CHECK(r_construction_check().passed());
}

TEST_CASE("RLL in the clock/shift oracle representation") {
  auto img = glq2_images();
  const C l(0.9, 0.7), m(1.2, -0.4);
  struct Case { LKind l; AlgebraId a; RKind r; };
  for (Case c : {Case{LKind::rg, AlgebraId::GLq2, RKind::R}, Case{LKind::g, AlgebraId::GLq2Ext, RKind::R},
                 Case{LKind::ghat, AlgebraId::GLq2Ext, RKind::Rhat}}) {
    Mat R = scalar_matrix(build_R(c.r), point(kQ, l));
    CHECK(rll_numeric(R, l_block(c.l, c.a, img, l * m), l_block(c.l, c.a, img, m)) < 1e-12);
  }
  Mat wrong = scalar_matrix(build_R(RKind::R), point(kQ, l));
  CHECK(rll_numeric(wrong, l_block(LKind::ghat, AlgebraId::GLq2Ext, img, l * m),
                    l_block(LKind::ghat, AlgebraId::GLq2Ext, img, m)) > 1e-3);
}

TEST_CASE("symbolic RLL for every partnered L-matrix") {
  int partnered = 0;
  for (const auto& info : l_kinds()) {
    if (!info.partner) continue;
    ++partnered;
    CHECK_MESSAGE(rll_check(*info.partner, info.kind).passed(), info.name);
  }
  CHECK(partnered >= 9);
  CHECK_FALSE(rll_residual(RKind::R, LKind::ghat).is_zero());
  CHECK(constant_rll_suite().passed());
  CHECK(free_rll_expansion_check().passed());
  CHECK(rll_coefficient_matching_check().passed());
}

TEST_CASE("q-determinant conventions") {
  auto conv = select_qdet_conventions();
  CHECK_FALSE(conv.empty());
  CHECK(qdet_convention_check().passed());
  CHECK(qdet_ghat_check().passed());
  // D_q of the constant matrix under the selected convention.
  auto pres = build_presentation(AlgebraId::GLq2);
  NCPoly d = qdet(build_L(LKind::gconst, *pres), conv.front(), *pres);
  CHECK(d == Dq(AlgebraId::GLq2));
}

TEST_CASE("transfer matrices") {
  for (int n : {1, 2, 3}) CHECK(transfer_lambda_independence_check(n).passed());
  for (int n : {2, 3}) {
    CHECK(transfer_commutator_check(LKind::ghat, n).passed());
    CHECK(transfer_commutator_check(LKind::LqDST, n).passed());
    CHECK(qdst_expansion_check(n).passed());
  }
  auto pres = build_presentation(AlgebraId::GLq2Ext);
  CHECK_THROWS(transfer_matrix(LKind::g, *pres, 4, Coefficient::monomial(Param::lambda, 1), 3));
}

TEST_CASE("twists") {
  CHECK(twist_oscillator_check().passed());
  CHECK(twist_weyl_check().passed());
  CHECK(twist_toda_check().passed());
  CHECK(twist_identity_suite().passed());
}
