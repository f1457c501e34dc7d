#pragma once
// Polynomial identities between coproducts, central elements and maps.
#include <functional>
#include <string>
#include <vector>

#include "qbax/catalog.hpp"

namespace qbax {

struct IdentityCheck {
  std::string id;
  std::string anchor;
  std::string claim;
  AlgebraId algebra;
  /// Extra bookkeeping, e.g. how a central inverse was cleared.
  std::string note;
  /// Normal-formed left minus right, one entry per component.
  std::function<std::vector<NCPoly>()> residual;
};

const std::vector<IdentityCheck>& identity_registry();
const IdentityCheck* find_identity(std::string_view id);
CheckResult run_identity(const IdentityCheck& check);
/// Throws ConfigError for an unknown id.
CheckResult run_identity(std::string_view id);

/// The uncorrected decomposition of X(l) for delta; nonzero.
NCPoly x_decomposition_uncorrected();

}  // namespace qbax
