#pragma once
// Presentations by generators and length-2 rewrite rules; PBW normal forms.
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbax/check.hpp"
#include "qbax/ncpoly.hpp"

namespace qbax {

/// Single-site polynomial: list of (generator word, coefficient).
using LocalPoly = std::vector<std::pair<std::vector<GenId>, Coefficient>>;

struct Rule {
  GenId left = 0;
  GenId right = 0;
  LocalPoly rhs;
  bool unit = false;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Presentation {
 public:
  const std::string& name() const { return name_; }
  AlgebraTag tag() const { return tag_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& generator_name(GenId g) const;
  std::optional<GenId> find(std::string_view name) const;
  GenId gen(std::string_view name) const;  // throws ConfigError

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* rule_for(GenId left, GenId right) const {
    int i = table_[left * generators_.size() + right];
    return i < 0 ? nullptr : &rules_[static_cast<std::size_t>(i)];
  }
  const std::vector<std::pair<GenId, GenId>>& unit_pairs() const { return unit_pairs_; }
  bool has_star() const { return conj_.size() == generators_.size(); }
  const std::vector<GenId>& conj_table() const { return conj_; }

  NCPoly one() const { return NCPoly::scalar(Coefficient(1), tag_); }
  NCPoly scalar(const Coefficient& c) const { return NCPoly::scalar(c, tag_); }
  NCPoly g(std::string_view name, std::uint16_t site = 0) const {
    return NCPoly::letter(gen(name), site, tag_);
  }
  /// Product of named generators at one site, e.g. word("a d").
  NCPoly word(std::string_view names, std::uint16_t site = 0) const;
  /// Relation lhs - rhs of a rule as a single-site polynomial.
  NCPoly relation(const Rule& r) const;
  std::string rule_label(const Rule& r) const;

  /// Same generators and rules with the rule for left*right removed.
  PresentationPtr without_rule(std::string_view left, std::string_view right) const;
  /// Same generators, no relations.
  PresentationPtr free_copy() const;

 private:
  friend class PresentationBuilder;
  Presentation() = default;
  void index();

  std::string name_;
  AlgebraTag tag_ = 0;
  std::vector<std::string> generators_;
  std::vector<Rule> rules_;
  std::vector<std::pair<GenId, GenId>> unit_pairs_;
  std::vector<GenId> conj_;
  std::vector<int> table_;
};

class PresentationBuilder {
 public:
  explicit PresentationBuilder(std::string name) : name_(std::move(name)) {}
  PresentationBuilder& generators(const std::vector<std::string>& names);
  /// lhs like "d a"; rhs terms as (word, coefficient), "" is the unit word.
  PresentationBuilder& rule(std::string_view lhs,
                            const std::vector<std::pair<std::string, Coefficient>>& rhs);
  PresentationBuilder& rule(const Rule& r);
  PresentationBuilder& unit(std::string_view x, std::string_view xinv);
  PresentationBuilder& star(std::string_view x, std::string_view image);
  /// Validates the termination witness; throws ConfigError.
  PresentationPtr build() const;

 private:
  std::vector<GenId> parse_word(std::string_view w) const;
  GenId id(std::string_view n) const;

  std::string name_;
  std::vector<std::string> gens_;
  std::vector<Rule> rules_;
  std::vector<std::pair<GenId, GenId>> units_;
  std::vector<std::pair<GenId, GenId>> stars_;
};

AlgebraTag fresh_algebra_tag();

// ---- operations -----------------------------------------------------------

/// Serial reference implementation.
NCPoly normal_form_serial(const NCPoly& p, const Presentation& pres);
/// OpenMP version, splits the input terms across threads; identical result.
NCPoly normal_form_parallel(const NCPoly& p, const Presentation& pres);
/// Dispatches to the parallel kernel for large inputs.
NCPoly normal_form(const NCPoly& p, const Presentation& pres);

NCPoly mul(const NCPoly& a, const NCPoly& b, const Presentation& pres);
NCPoly mul(std::initializer_list<NCPoly> factors, const Presentation& pres);
NCPoly pow(const NCPoly& a, int n, const Presentation& pres);
NCPoly commutator(const NCPoly& a, const NCPoly& b, const Presentation& pres);
NCPoly star(const NCPoly& p, const Presentation& pres);

CheckResult check_confluence(const Presentation& pres);
std::vector<NCPoly> commutators_with_generators(const NCPoly& p, const Presentation& pres);

/// Human-readable form, e.g. "q^-1 a@0 b@1 + a@0".
std::string to_string(const NCPoly& p, const Presentation& pres);

}  // namespace qbax
