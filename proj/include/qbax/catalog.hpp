#pragma once
// The concrete algebras, maps and central elements.
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbax/genmap.hpp"

namespace qbax {

enum class AlgebraId { GLq2, GLq2Ext, GLq2ExtPrime, GLq2ExtDoublePrime, Aq, Wq };
enum class MapId { Delta, delta, deltaA, DeltaA, deltaW, DeltaWpoly, Q, Qprime, Qdoubleprime, iota };

inline constexpr AlgebraId kAllAlgebras[] = {AlgebraId::GLq2,         AlgebraId::GLq2Ext,
                                             AlgebraId::GLq2ExtPrime, AlgebraId::GLq2ExtDoublePrime,
                                             AlgebraId::Aq,           AlgebraId::Wq};
inline constexpr MapId kAllMaps[] = {MapId::Delta,  MapId::delta,      MapId::deltaA, MapId::DeltaA,
                                     MapId::deltaW, MapId::DeltaWpoly, MapId::Q,      MapId::Qprime,
                                     MapId::Qdoubleprime, MapId::iota};

std::string_view algebra_name(AlgebraId id);
std::optional<AlgebraId> algebra_from_name(std::string_view name);
std::string_view map_name(MapId id);
std::optional<MapId> map_from_name(std::string_view name);

/// Cached, immutable.
PresentationPtr build_presentation(AlgebraId id);
const GenMap& build_map(MapId id);

/// Δ on GLq2Ext or one of its factor algebras; θ is left uncovered.
const GenMap& Delta_over(AlgebraId id);
/// ι⁻¹ : GLq2ExtDoublePrime -> GLq2ExtPrime (also swaps b and c).
const GenMap& iota_inverse();

struct CentralElement {
  std::string name;
  AlgebraId algebra;
  NCPoly value;
};

std::vector<CentralElement> central_elements();
NCPoly Dq(AlgebraId id);

/// True when every generator commutator vanishes.
CheckResult check_central(const CentralElement& e);

/// Scalar constraints on a would-be counit ε forced by (id⊗ε)m = id and (ε⊗id)m = id.
struct CounitAnalysis {
  bool contradiction = false;
  std::vector<std::string> constraints;
  std::vector<std::string> contradictions;
  std::string summary() const;
};
CounitAnalysis counit_analysis(const GenMap& m);
/// ε(g) = identity matrix for Δ on GLq2.
CheckResult counit_identity_Delta();
CheckResult verify_counit_absence();

/// ι∘ι = id on generators.
CheckResult check_iota_involution();

}  // namespace qbax
