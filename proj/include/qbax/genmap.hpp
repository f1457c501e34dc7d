#pragma once
// Generator maps: algebra homomorphisms and site-doubling coproducts.
#include <optional>
#include <string>
#include <vector>

#include "qbax/presentation.hpp"

namespace qbax {

class GenMap {
 public:
  GenMap(std::string name, PresentationPtr source, PresentationPtr target, int arity);

  const std::string& name() const { return name_; }
  const Presentation& source() const { return *source_; }
  const Presentation& target() const { return *target_; }
  const PresentationPtr& source_ptr() const { return source_; }
  const PresentationPtr& target_ptr() const { return target_; }
  int arity() const { return arity_; }

  /// Image of a generator at site 0 (sites 0,1 for arity 2).
  void set_image(std::string_view gen, NCPoly image);
  bool covers(GenId g) const { return images_[g].has_value(); }
  const std::optional<NCPoly>& image(GenId g) const { return images_[g]; }
  std::vector<std::string> uncovered() const;

 private:
  std::string name_;
  PresentationPtr source_;
  PresentationPtr target_;
  int arity_;
  std::vector<std::optional<NCPoly>> images_;
};

/// Multiplicative extension; source site k goes to k (arity 1) or 2k, 2k+1 (arity 2).
NCPoly apply_map(const GenMap& m, const NCPoly& p);
/// Arity-2 endomorphism applied at one site only: site s becomes s, s+1 and later
/// sites shift by one. (id ⊗ Δ) is apply_map_at(Δ, x, 1).
NCPoly apply_map_at(const GenMap& m, const NCPoly& p, int site);
/// Tensor power m ⊗ m of an arity-1 map on a multi-site polynomial is just apply_map.

/// Same word in another presentation with the same generator names, normal-formed there.
NCPoly transport(const NCPoly& p, const Presentation& from, const Presentation& to);

/// Image of every covered defining relation of the source must vanish.
CheckResult verify_hom(const GenMap& m);
/// (id⊗m)m = (m⊗id)m on covered generators.
CheckResult verify_coassoc(const GenMap& m);
/// (*⊗*)∘m = m∘* on covered generators.
CheckResult verify_star_hom(const GenMap& m);

}  // namespace qbax
