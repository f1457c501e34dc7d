#include "qbax/ncpoly.hpp"

#include <climits>

#include "qbax/error.hpp"

namespace qbax {

NCPoly NCPoly::scalar(const Coefficient& c, AlgebraTag tag) {
  NCPoly p(tag);
  p.add_term(SiteWord{}, c);
  return p;
}

NCPoly NCPoly::word(SiteWord w, const Coefficient& c, AlgebraTag tag) {
  NCPoly p(tag);
  p.add_term(std::move(w), c);
  return p;
}

NCPoly NCPoly::letter(GenId g, std::uint16_t site, AlgebraTag tag) {
  return word(SiteWord{Letter{site, g}}, Coefficient(1), tag);
}

void NCPoly::add_term(const SiteWord& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::add_term(SiteWord&& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::absorb_tag(AlgebraTag other) {
  if (other == 0 || other == tag_) return;
  if (tag_ == 0) {
    tag_ = other;
    return;
  }
  throw ConfigError("mixing polynomials from different presentations");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  absorb_tag(o.tag_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  absorb_tag(o.tag_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly operator*(const Coefficient& k, const NCPoly& p) {
  NCPoly r(p.tag_);
  if (k.is_zero()) return r;
  for (const auto& [w, c] : p.terms_) r.add_term(w, k * c);
  return r;
}

int NCPoly::max_site() const {
  int m = -1;
  for (const auto& [w, c] : terms_)
    for (const auto& l : w) m = std::max<int>(m, l.site);
  return m;
}

NCPoly NCPoly::shifted(int offset) const {
  NCPoly r(tag_);
  for (const auto& [w, c] : terms_) {
    SiteWord s = w;
    for (auto& l : s) {
      int site = int(l.site) + offset;
      if (site < 0 || site > USHRT_MAX) throw ConfigError("site index out of range");
      l.site = static_cast<std::uint16_t>(site);
    }
    r.add_term(std::move(s), c);
  }
  return r;
}

NCPoly NCPoly::map_coefficients(const std::function<Coefficient(const Coefficient&)>& f) const {
  NCPoly r(tag_);
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

int NCPoly::min_exponent(Param p) const {
  int m = INT_MAX;
  for (const auto& [w, c] : terms_) m = std::min(m, c.min_exponent(p));
  return terms_.empty() ? 0 : m;
}

int NCPoly::max_exponent(Param p) const {
  int m = INT_MIN;
  for (const auto& [w, c] : terms_) m = std::max(m, c.max_exponent(p));
  return terms_.empty() ? 0 : m;
}

Coefficient NCPoly::constant_term() const {
  auto it = terms_.find(SiteWord{});
  return it == terms_.end() ? Coefficient() : it->second;
}

NCPoly free_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly r = NCPoly(a.tag());
  r += NCPoly(b.tag());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      SiteWord w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  return r;
}

}  // namespace qbax
