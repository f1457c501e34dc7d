#pragma once
// Site-indexed noncommutative polynomials with Laurent coefficients.
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qbax/coefficient.hpp"

namespace qbax {

using GenId = std::uint8_t;
using AlgebraTag = std::uint32_t;  // 0: scalar, compatible with every algebra

struct Letter {
  std::uint16_t site = 0;
  GenId gen = 0;
  auto operator<=>(const Letter&) const = default;
};

using SiteWord = std::vector<Letter>;

/// Shorter words first, then lexicographic on (site, gen).
struct DegLexLess {
  bool operator()(const SiteWord& a, const SiteWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPoly {
 public:
  using TermMap = std::map<SiteWord, Coefficient, DegLexLess>;

  NCPoly() = default;
  explicit NCPoly(AlgebraTag tag) : tag_(tag) {}

  static NCPoly scalar(const Coefficient& c, AlgebraTag tag = 0);
  static NCPoly word(SiteWord w, const Coefficient& c, AlgebraTag tag);
  static NCPoly letter(GenId g, std::uint16_t site, AlgebraTag tag);

  AlgebraTag tag() const { return tag_; }
  void set_tag(AlgebraTag t) { tag_ = t; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const SiteWord& w, const Coefficient& c);
  void add_term(SiteWord&& w, const Coefficient& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const;
  friend NCPoly operator*(const Coefficient& c, const NCPoly& p);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Largest site index used, or -1 for a scalar.
  int max_site() const;
  NCPoly shifted(int offset) const;
  NCPoly map_coefficients(const std::function<Coefficient(const Coefficient&)>& f) const;
  /// Laurent coefficient of p^k in every term.
  NCPoly extract(Param p, int k) const { return map_coefficients([&](auto& c) { return c.extract(p, k); }); }
  int min_exponent(Param p) const;
  int max_exponent(Param p) const;
  /// Coefficient of the empty word.
  Coefficient constant_term() const;

 private:
  void absorb_tag(AlgebraTag other);
  TermMap terms_;
  AlgebraTag tag_ = 0;
};

/// Concatenation without any reduction (free product).
NCPoly free_mul(const NCPoly& a, const NCPoly& b);

}  // namespace qbax
