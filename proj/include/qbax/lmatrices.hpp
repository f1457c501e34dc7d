#pragma once
// Auxiliary R-matrices, L-matrices and the matrix identities between them.
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbax/catalog.hpp"
#include "qbax/opmatrix.hpp"

namespace qbax {

enum class RKind { Rplus, Rminus, P, R, Rhat };

std::string_view r_kind_name(RKind k);
std::optional<RKind> r_kind_from_name(std::string_view name);

/// 4x4 scalar matrix; `lam` is the spectral argument of R and Rhat.
OpMatrix build_R(RKind kind, const Coefficient& lam = Coefficient::monomial(Param::lambda, 1));
OpMatrix sigma1();
OpMatrix sigma3();
/// lambda^{sign*sigma_3/2} written with s = lambda^{1/2}.
OpMatrix sigma3_half_power(int sign, Param s = Param::s);

enum class LKind {
  gconst,       // [[a,b],[c,d]]
  gplus,        // [[theta,0],[a,b]]
  gminus,       // [[c,d],[0,0]]
  rg,           // GLq2, trigonometric gauge
  rghat,
  g,            // GLq2Ext
  ghat,
  LA,           // q-oscillator
  LAhat,
  LqDST,
  gprime,       // Weyl algebra, Volterra
  gprimecheck,
  gpp,          // Weyl algebra, free field
  gpphat,       // Weyl algebra, relativistic Toda before the twist
  LrT,          // relativistic Toda, polynomial twist form
};

struct LInfo {
  LKind kind;
  std::string_view name;
  AlgebraId algebra;
  /// Partner in the RLL relation R12(l) L13(l m) L23(m) = L23(m) L13(l m) R12(l).
  std::optional<RKind> partner;
  std::string_view anchor;
};

const std::vector<LInfo>& l_kinds();
const LInfo& l_info(LKind k);
std::optional<LKind> l_kind_from_name(std::string_view name);

/// Throws ConfigError if pres lacks a generator the kind uses. Constant kinds ignore lam.
OpMatrix build_L(LKind kind, const Presentation& pres, std::uint16_t site = 0,
                 const Coefficient& lam = Coefficient::monomial(Param::lambda, 1));

using LBuilder = std::function<OpMatrix(const Coefficient& spectral)>;

/// R12 L13(l m) L23(m) - L23(m) L13(l m) R12, normal-formed entrywise.
OpMatrix rll_residual(const OpMatrix& R12, const LBuilder& L, const Coefficient& lam,
                      const Coefficient& mu, const Presentation& pres);
OpMatrix rll_residual(RKind r, LKind l, const Presentation& pres);
OpMatrix rll_residual(RKind r, LKind l);
/// R g1_13 g2_23 - g2_23 g1_13 R for constant matrices.
OpMatrix constant_rll_residual(const OpMatrix& R, const OpMatrix& g1, const OpMatrix& g2,
                               const Presentation& pres);

CheckResult rll_check(RKind r, LKind l);
CheckResult constant_rll_suite();
/// Free-algebra expansion of the (R, g) relation: nonzero before reduction, zero after.
CheckResult free_rll_expansion_check();
/// Laurent coefficients of the free (Rhat, ghat) residual against the constant relations.
CheckResult rll_coefficient_matching_check();

CheckResult hecke_check();
CheckResult flip_symmetry_check();
/// R(l) from Rhat(l) by the sigma_3 twist and Rhat = l R+ - l^-1 R-.
CheckResult r_construction_check();

enum class QdetConvention { AD_qBC, AD_qinvBC, DA_qCB, DA_qinvCB };
inline constexpr QdetConvention kAllQdetConventions[] = {
    QdetConvention::AD_qBC, QdetConvention::AD_qinvBC, QdetConvention::DA_qCB,
    QdetConvention::DA_qinvCB};
std::string_view qdet_convention_name(QdetConvention c);
NCPoly qdet(const OpMatrix& m, QdetConvention c, const Presentation& pres);
/// Conventions for which qdet g(l) = D_q - q^-1 l^2 eta'.
std::vector<QdetConvention> select_qdet_conventions();
CheckResult qdet_convention_check();
/// Compares qdet g(l) with -qdet ghat(l) under the selected convention.
CheckResult qdet_ghat_check();

/// tr(L_{N-1}(l) ... L_0(l)), one site per copy.
NCPoly transfer_matrix(LKind kind, const Presentation& pres, int nsites,
                       const Coefficient& lam = Coefficient::monomial(Param::lambda, 1),
                       int max_sites = 3);
NCPoly transfer_matrix(const std::function<OpMatrix(std::uint16_t site)>& L, const Presentation& pres,
                       int nsites, int max_sites = 3);
/// T(l) T(m) - T(m) T(l).
NCPoly transfer_commutator(LKind kind, const Presentation& pres, int nsites, int max_sites = 3);
CheckResult transfer_lambda_independence_check(int nsites, int max_sites = 3);
CheckResult transfer_commutator_check(LKind kind, int nsites, int max_sites = 3);
CheckResult qdst_expansion_check(int nsites, int max_sites = 3);

/// Entrywise image under a generator map (arity 1).
OpMatrix apply_map(const GenMap& m, const OpMatrix& x);
/// Replace s^{2k} by lambda^k; odd powers of s throw DomainError.
OpMatrix s_to_lambda(const OpMatrix& m);
/// Inner twist h^{alpha log l} x h^{-alpha log l} = l^{w_x} x for a grading w.
OpMatrix grading_twist(const OpMatrix& m, const Presentation& pres,
                       const std::map<std::string, int>& weights, Param lam = Param::lambda);
/// h x h^-1 = q^{w_x} x for every generator x with a weight.
CheckResult grading_weights_check(const Presentation& pres, std::string_view h,
                                  std::string_view hinv, const std::map<std::string, int>& weights);
/// (1/i) M(i l): l^k picks up i^{k-1}; throws DomainError when k is even.
OpMatrix phase_rotate(const OpMatrix& m, Param lam = Param::lambda);

CheckResult twist_oscillator_check();
CheckResult twist_weyl_check();
CheckResult twist_toda_check();
CheckResult twist_identity_suite();

/// R12(l) R13(l m) R23(m) - R23(m) R13(l m) R12(l), 8x8.
OpMatrix ybe_residual(RKind kind);

}  // namespace qbax
