#pragma once
// Formal differential polynomials in one field, for zero-curvature checks.
#include <array>
#include <map>
#include <string>

#include <gmpxx.h>

#include "qbax/coefficient.hpp"

namespace qbax {

/// Phi^a (d+Phi)^b (d-Phi)^c (d+d-Phi)^d exp((r + s beta) Phi).
struct DiffMono {
  std::array<int, 4> pow{0, 0, 0, 0};
  mpq_class exp_r = 0, exp_s = 0;

  bool operator<(const DiffMono& o) const;
  bool operator==(const DiffMono& o) const;
};

enum class DiffSym { Phi = 0, dp = 1, dm = 2, dpm = 3 };

class DiffExpr {
 public:
  using TermMap = std::map<DiffMono, Coefficient>;

  DiffExpr() = default;
  static DiffExpr constant(const Coefficient& c);
  static DiffExpr symbol(DiffSym s, const Coefficient& c = 1);
  /// c exp((r + s beta) Phi)
  static DiffExpr exponential(const mpq_class& r, const mpq_class& s, const Coefficient& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  DiffExpr& operator+=(const DiffExpr& o);
  DiffExpr& operator-=(const DiffExpr& o);
  friend DiffExpr operator+(DiffExpr a, const DiffExpr& b) { return a += b; }
  friend DiffExpr operator-(DiffExpr a, const DiffExpr& b) { return a -= b; }
  friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
  friend DiffExpr operator*(const Coefficient& c, const DiffExpr& a);

  /// Leibniz rule; d-(d+Phi) = d+(d-Phi) = d+d-Phi. Second derivatives outside the alphabet throw DomainError.
  DiffExpr d_plus() const;
  DiffExpr d_minus() const;
  /// Replace every d+d-Phi by rhs.
  DiffExpr substitute_box(const DiffExpr& rhs) const;

  std::string to_string() const;

 private:
  void add(const DiffMono& m, const Coefficient& c);
  TermMap terms_;
};

using DiffMatrix = std::array<std::array<DiffExpr, 2>, 2>;

DiffMatrix operator*(const DiffMatrix& a, const DiffMatrix& b);

enum class ZcPreset { liouville, volterra_freefield, liouville_freefield };
std::string_view zc_preset_name(ZcPreset p);
ZcPreset zc_preset_from_name(std::string_view name);  // throws ConfigError

struct ZcResult {
  DiffMatrix residual;  // d-U+ + d+U- - 2[U+, U-]
  DiffMatrix reduced;   // after the equation of motion
  DiffExpr box_rhs;
  std::size_t residual_terms() const;
  std::size_t reduced_terms() const;
};

/// U+ and U- of the preset.
std::pair<DiffMatrix, DiffMatrix> zc_pair(ZcPreset p);
ZcResult zc_residual(ZcPreset p);

}  // namespace qbax
