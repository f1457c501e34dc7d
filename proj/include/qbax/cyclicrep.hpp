#pragma once
// Root-of-unity clock/shift representations: a floating-point channel for RLL and transfer claims.
#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbax/catalog.hpp"
#include "qbax/lmatrices.hpp"

namespace qbax {

using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

struct MatrixRep {
  AlgebraId algebra;
  int N = 0;
  int m = 1;
  cplx q;
  cplx z = 1.0;  // Z_q image
  cplx c = 0.0;  // C_q image
  std::map<std::string, CMat> images;

  /// Parameter values for Coefficient::evaluate; lambda set separately.
  ParamValues params(cplx lambda = 1.0) const;
  const CMat& image(const std::string& gen) const;  // throws ConfigError
};

/// u = clock, v = shift, ut = z u^-1.
MatrixRep weyl_rep(int N, int m, cplx z = 1.0);
/// k = clock, f = shift, e = A shift^-1 with A_{j+1} = c + q^{2j+1}.
MatrixRep qosc_rep(int N, int m, cplx c = 0.7);
/// Pullback of qosc_rep along a=e, b=c=k, theta=kinv, d=f.
MatrixRep glq2ext_rep(int N, int m, cplx c = 0.7);
/// Rep matching the algebra an L kind lives in.
MatrixRep rep_for(AlgebraId algebra, int N, int m = 1);

/// Numeric image of a polynomial on nsites tensor copies (site 0 is the leftmost factor).
CMat evaluate(const NCPoly& p, const Presentation& pres, const MatrixRep& rep, const ParamValues& v, int nsites = 1);
/// Aux-by-aux block matrix, aux index outer and quantum index inner.
CMat evaluate_block(const OpMatrix& m, const Presentation& pres, const MatrixRep& rep, const ParamValues& v,
                    int nsites = 1);

/// Largest Frobenius norm over the defining relations and the central images.
double relation_residual(const MatrixRep& rep);

/// Frobenius norm of R12 L13(l m) L23(m) - L23(m) L13(l m) R12 on C^2 x C^2 x C^N.
double rll_residual_num(RKind r, LKind l, const MatrixRep& rep, cplx lam, cplx mu);
/// ||[T(l), T(m)]|| / (||T(l)|| ||T(m)||); N^sites <= 1e4.
double transfer_commutator_num(LKind l, const MatrixRep& rep, int sites, cplx lam, cplx mu);
CMat transfer_matrix_num(LKind l, const MatrixRep& rep, int sites, cplx lam);

/// Seeded (lambda, mu) pairs on the unit circle.
std::vector<std::pair<cplx, cplx>> unit_circle_points(std::uint64_t seed, int count);

/// Worst residual over the points; OpenMP across points, serial flag for the reference.
double rll_sweep(RKind r, LKind l, const MatrixRep& rep, const std::vector<std::pair<cplx, cplx>>& pts,
                 bool parallel = true);

CheckResult rep_relations_check(double tol = 1e-12);
/// Every partnered L kind at N in {3,5,7}, 20 points each.
CheckResult rll_num_suite(std::uint64_t seed, double tol = 1e-10);
/// The non-partner R must leave a visible residual.
CheckResult rll_num_negative_control(std::uint64_t seed, double floor = 1e-3);
CheckResult transfer_commutator_num_check(std::uint64_t seed, int sites = 3, double tol = 1e-10);
/// Laurent coefficients of T(l) from a DFT against Q and Q H evaluated from their formulas.
CheckResult qdst_fit_check(int sites = 2, double tol = 1e-10);

}  // namespace qbax
