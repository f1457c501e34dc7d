#include "qbax/diffexpr.hpp"

#include <sstream>

#include "qbax/error.hpp"

namespace qbax {

bool DiffMono::operator<(const DiffMono& o) const {
  if (pow != o.pow) return pow < o.pow;
  if (exp_r != o.exp_r) return exp_r < o.exp_r;
  return exp_s < o.exp_s;
}

bool DiffMono::operator==(const DiffMono& o) const {
  return pow == o.pow && exp_r == o.exp_r && exp_s == o.exp_s;
}

void DiffExpr::add(const DiffMono& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffExpr DiffExpr::constant(const Coefficient& c) {
  DiffExpr e;
  e.add(DiffMono{}, c);
  return e;
}

DiffExpr DiffExpr::symbol(DiffSym s, const Coefficient& c) {
  DiffMono m;
  m.pow[static_cast<std::size_t>(s)] = 1;
  DiffExpr e;
  e.add(m, c);
  return e;
}

DiffExpr DiffExpr::exponential(const mpq_class& r, const mpq_class& s, const Coefficient& c) {
  DiffMono m;
  m.exp_r = r;
  m.exp_s = s;
  DiffExpr e;
  e.add(m, c);
  return e;
}

DiffExpr& DiffExpr::operator+=(const DiffExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
  DiffExpr r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      DiffMono m;
      for (std::size_t i = 0; i < 4; ++i) m.pow[i] = ma.pow[i] + mb.pow[i];
      m.exp_r = ma.exp_r + mb.exp_r;
      m.exp_s = ma.exp_s + mb.exp_s;
      r.add(m, ca * cb);
    }
  return r;
}

DiffExpr operator*(const Coefficient& c, const DiffExpr& a) {
  DiffExpr r;
  for (const auto& [m, v] : a.terms_) r.add(m, c * v);
  return r;
}

namespace {

DiffExpr mono_expr(const DiffMono& m, const Coefficient& c) {
  DiffExpr x = DiffExpr::exponential(m.exp_r, m.exp_s, c);
  for (std::size_t i = 0; i < 4; ++i)
    for (int k = 0; k < m.pow[i]; ++k) x = x * DiffExpr::symbol(static_cast<DiffSym>(i));
  return x;
}

// d(sym) for one symbol under d+ (plus = true) or d-.
DiffExpr d_symbol(DiffSym s, bool plus) {
  switch (s) {
    case DiffSym::Phi: return DiffExpr::symbol(plus ? DiffSym::dp : DiffSym::dm);
    case DiffSym::dp:
      if (!plus) return DiffExpr::symbol(DiffSym::dpm);
      break;
    case DiffSym::dm:
      if (plus) return DiffExpr::symbol(DiffSym::dpm);
      break;
    case DiffSym::dpm: break;
  }
  throw DomainError("derivative leaves the alphabet {Phi, d+Phi, d-Phi, d+d-Phi}");
}

DiffExpr derive(const DiffExpr& e, bool plus) {
  DiffExpr out;
  const auto phi_d = static_cast<std::size_t>(plus ? DiffSym::dp : DiffSym::dm);
  for (const auto& [m, c] : e.terms()) {
    // exp((r + s beta) Phi) -> (r + s beta) dPhi exp(...)
    if (m.exp_r != 0 || m.exp_s != 0) {
      DiffMono mm = m;
      mm.pow[phi_d] += 1;
      out += mono_expr(mm, c * (Coefficient(m.exp_r) + Coefficient::monomial(Param::beta, 1, m.exp_s)));
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (m.pow[i] == 0) continue;
      DiffMono rest = m;
      rest.pow[i] -= 1;
      out += mono_expr(rest, Coefficient(static_cast<long>(m.pow[i])) * c) * d_symbol(static_cast<DiffSym>(i), plus);
    }
  }
  return out;
}

}  // namespace

DiffExpr DiffExpr::d_plus() const { return derive(*this, true); }
DiffExpr DiffExpr::d_minus() const { return derive(*this, false); }

DiffExpr DiffExpr::substitute_box(const DiffExpr& rhs) const {
  DiffExpr out;
  const std::size_t k = static_cast<std::size_t>(DiffSym::dpm);
  for (const auto& [m, c] : terms_) {
    DiffMono rest = m;
    rest.pow[k] = 0;
    DiffExpr x = mono_expr(rest, c);
    for (int i = 0; i < m.pow[k]; ++i) x = x * rhs;
    out += x;
  }
  return out;
}

std::string DiffExpr::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[] = {"Phi", "d+Phi", "d-Phi", "d+d-Phi"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    for (std::size_t i = 0; i < 4; ++i)
      if (m.pow[i]) os << " " << names[i] << (m.pow[i] > 1 ? "^" + std::to_string(m.pow[i]) : "");
    if (m.exp_r != 0 || m.exp_s != 0) os << " exp((" << m.exp_r << " + " << m.exp_s << " beta) Phi)";
  }
  return os.str();
}

DiffMatrix operator*(const DiffMatrix& a, const DiffMatrix& b) {
  DiffMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

std::string_view zc_preset_name(ZcPreset p) {
  switch (p) {
    case ZcPreset::liouville: return "liouville";
    case ZcPreset::volterra_freefield: return "volterra_freefield";
    case ZcPreset::liouville_freefield: return "liouville_freefield";
  }
  return "?";
}

ZcPreset zc_preset_from_name(std::string_view name) {
  for (ZcPreset p : {ZcPreset::liouville, ZcPreset::volterra_freefield, ZcPreset::liouville_freefield})
    if (zc_preset_name(p) == name) return p;
  throw ConfigError("unknown zero-curvature preset '" + std::string(name) + "'");
}

std::size_t ZcResult::residual_terms() const {
  std::size_t n = 0;
  for (const auto& row : residual)
    for (const auto& e : row) n += e.size();
  return n;
}

std::size_t ZcResult::reduced_terms() const {
  std::size_t n = 0;
  for (const auto& row : reduced)
    for (const auto& e : row) n += e.size();
  return n;
}

std::pair<DiffMatrix, DiffMatrix> zc_pair(ZcPreset p) {
  const Coefficient lam = Coefficient::monomial(Param::lambda, 1), li = Coefficient::monomial(Param::lambda, -1);
  const Coefficient b8 = Coefficient::monomial(Param::beta, 1, mpq_class(1, 8));
  const mpq_class half(1, 2);
  DiffMatrix up, um;
  switch (p) {
    case ZcPreset::liouville:
      up[0][0] = DiffExpr::symbol(DiffSym::dp, b8);
      up[0][1] = DiffExpr::exponential(0, -half, lam);
      up[1][0] = DiffExpr::exponential(0, half, lam);
      up[1][1] = DiffExpr::symbol(DiffSym::dp, -b8);
      um[0][0] = DiffExpr::symbol(DiffSym::dm, b8);
      um[1][0] = DiffExpr::exponential(0, -half, li);
      um[1][1] = DiffExpr::symbol(DiffSym::dm, -b8);
      break;
    case ZcPreset::volterra_freefield:
      up[0][0] = DiffExpr::symbol(DiffSym::dp, Coefficient(mpq_class(1, 2)));
      up[0][1] = DiffExpr::exponential(-2, 0, lam);
      up[1][0] = DiffExpr::exponential(2, 0, lam);
      up[1][1] = DiffExpr::symbol(DiffSym::dp, Coefficient(mpq_class(-1, 2)));
      um[0][0] = DiffExpr::symbol(DiffSym::dm, Coefficient(mpq_class(1, 2)));
      um[1][1] = DiffExpr::symbol(DiffSym::dm, Coefficient(mpq_class(-1, 2)));
      break;
    case ZcPreset::liouville_freefield:
      up[0][0] = DiffExpr::symbol(DiffSym::dp, b8);
      up[1][0] = DiffExpr::exponential(0, half, lam);
      up[1][1] = DiffExpr::symbol(DiffSym::dp, -b8);
      um[0][0] = DiffExpr::symbol(DiffSym::dm, b8);
      um[1][0] = DiffExpr::exponential(0, -half, li);
      um[1][1] = DiffExpr::symbol(DiffSym::dm, -b8);
      break;
  }
  return {up, um};
}

ZcResult zc_residual(ZcPreset p) {
  auto [up, um] = zc_pair(p);
  DiffMatrix a = up * um, b = um * up;
  ZcResult r;
  r.box_rhs = p == ZcPreset::liouville ? DiffExpr::exponential(0, -1, Coefficient::monomial(Param::beta, -1, 8)) : DiffExpr();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r.residual[i][j] = up[i][j].d_minus() + um[i][j].d_plus() - Coefficient(2) * (a[i][j] - b[i][j]);
      r.reduced[i][j] = r.residual[i][j].substitute_box(r.box_rhs);
    }
  return r;
}

}  // namespace qbax
