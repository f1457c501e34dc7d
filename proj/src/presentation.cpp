#include "qbax/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include <omp.h>

#include "qbax/error.hpp"

namespace qbax {

AlgebraTag fresh_algebra_tag() {
  static std::atomic<AlgebraTag> next{1};
  return next++;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

const std::string& Presentation::generator_name(GenId g) const {
  if (g >= generators_.size()) throw ConfigError("unknown generator id in " + name_);
  return generators_[g];
}

std::optional<GenId> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<GenId>(i);
  return std::nullopt;
}

GenId Presentation::gen(std::string_view name) const {
  auto g = find(name);
  if (!g) throw ConfigError("unknown generator '" + std::string(name) + "' in " + name_);
  return *g;
}

NCPoly Presentation::word(std::string_view names, std::uint16_t site) const {
  SiteWord w;
  std::istringstream in{std::string(names)};
  std::string tok;
  while (in >> tok) w.push_back(Letter{site, gen(tok)});
  return NCPoly::word(std::move(w), Coefficient(1), tag_);
}

NCPoly Presentation::relation(const Rule& r) const {
  NCPoly p = NCPoly::word(SiteWord{Letter{0, r.left}, Letter{0, r.right}}, Coefficient(1), tag_);
  for (const auto& [w, c] : r.rhs) {
    SiteWord sw;
    for (GenId g : w) sw.push_back(Letter{0, g});
    p.add_term(std::move(sw), -c);
  }
  return p;
}

std::string Presentation::rule_label(const Rule& r) const {
  return generators_[r.left] + " " + generators_[r.right];
}

void Presentation::index() {
  const std::size_t n = generators_.size();
  table_.assign(n * n, -1);
  for (std::size_t i = 0; i < rules_.size(); ++i)
    table_[rules_[i].left * n + rules_[i].right] = static_cast<int>(i);
}

PresentationPtr Presentation::without_rule(std::string_view left, std::string_view right) const {
  auto p = std::shared_ptr<Presentation>(new Presentation(*this));
  GenId l = gen(left), r = gen(right);
  std::erase_if(p->rules_, [&](const Rule& x) { return x.left == l && x.right == r; });
  p->name_ = name_ + "-without-" + std::string(left) + std::string(right);
  p->tag_ = fresh_algebra_tag();
  p->index();
  return p;
}

PresentationPtr Presentation::free_copy() const {
  auto p = std::shared_ptr<Presentation>(new Presentation(*this));
  p->rules_.clear();
  p->unit_pairs_.clear();
  p->name_ = name_ + "-free";
  p->tag_ = fresh_algebra_tag();
  p->index();
  return p;
}

// ---- builder ----------------------------------------------------------------

PresentationBuilder& PresentationBuilder::generators(const std::vector<std::string>& names) {
  if (names.size() > 255) throw ConfigError("too many generators");
  gens_ = names;
  return *this;
}

GenId PresentationBuilder::id(std::string_view n) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == n) return static_cast<GenId>(i);
  throw ConfigError("unknown generator '" + std::string(n) + "' in " + name_);
}

std::vector<GenId> PresentationBuilder::parse_word(std::string_view w) const {
  std::vector<GenId> out;
  std::istringstream in{std::string(w)};
  std::string tok;
  while (in >> tok) out.push_back(id(tok));
  return out;
}

PresentationBuilder& PresentationBuilder::rule(
    std::string_view lhs, const std::vector<std::pair<std::string, Coefficient>>& rhs) {
  auto l = parse_word(lhs);
  if (l.size() != 2) throw ConfigError("rule left side must have length 2: " + std::string(lhs));
  Rule r;
  r.left = l[0];
  r.right = l[1];
  for (const auto& [w, c] : rhs)
    if (!c.is_zero()) r.rhs.emplace_back(parse_word(w), c);
  return rule(r);
}

PresentationBuilder& PresentationBuilder::rule(const Rule& r) {
  std::erase_if(rules_, [&](const Rule& x) { return x.left == r.left && x.right == r.right; });
  rules_.push_back(r);
  return *this;
}

PresentationBuilder& PresentationBuilder::unit(std::string_view x, std::string_view xinv) {
  GenId a = id(x), b = id(xinv);
  units_.emplace_back(a, b);
  for (auto [l, r] : {std::pair{a, b}, std::pair{b, a}}) {
    Rule u;
    u.left = l;
    u.right = r;
    u.rhs.emplace_back(std::vector<GenId>{}, Coefficient(1));
    u.unit = true;
    rule(u);
  }
  return *this;
}

PresentationBuilder& PresentationBuilder::star(std::string_view x, std::string_view image) {
  stars_.emplace_back(id(x), id(image));
  return *this;
}

PresentationPtr PresentationBuilder::build() const {
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->name_ = name_;
  p->tag_ = fresh_algebra_tag();
  p->generators_ = gens_;
  p->unit_pairs_ = units_;
  for (const Rule& r : rules_) {
    if (!r.unit) {
      if (r.left <= r.right)
        throw ConfigError(name_ + ": rule " + gens_[r.left] + " " + gens_[r.right] +
                          " is not a descending pair");
      for (const auto& [w, c] : r.rhs) {
        bool smaller = w.size() < 2 ||
                       (w.size() == 2 && std::pair{w[0], w[1]} < std::pair{r.left, r.right});
        if (!smaller)
          throw ConfigError(name_ + ": rule " + gens_[r.left] + " " + gens_[r.right] +
                            " has a right side that is not deg-lex smaller");
      }
    }
  }
  p->rules_ = rules_;
  // Keep rules in a canonical order so reports do not depend on insertion order.
  std::sort(p->rules_.begin(), p->rules_.end(), [](const Rule& a, const Rule& b) {
    return std::pair{a.left, a.right} < std::pair{b.left, b.right};
  });
  if (!stars_.empty()) {
    p->conj_.assign(gens_.size(), 0);
    std::vector<bool> seen(gens_.size(), false);
    for (auto [x, y] : stars_) {
      p->conj_[x] = y;
      seen[x] = true;
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (!seen[i]) throw ConfigError(name_ + ": generator " + gens_[i] + " missing from star table");
  }
  p->index();
  return p;
}

// ---- normal form ---------------------------------------------------------------

namespace {

void check_letters(const SiteWord& w, const Presentation& pres) {
  for (const auto& l : w)
    if (l.gen >= pres.generator_count())
      throw ConfigError("generator id " + std::to_string(l.gen) + " not in " + pres.name());
}

void check_tag(const NCPoly& p, const Presentation& pres) {
  if (p.tag() != 0 && p.tag() != pres.tag())
    throw ConfigError("polynomial does not belong to presentation " + pres.name());
}

// Rewrites the deg-lex largest pending word first; every rewrite produces strictly
// smaller words, so merged coefficients are final when a word is popped.
NCPoly reduce_terms(const NCPoly::TermMap& input, const Presentation& pres) {
  NCPoly::TermMap pending;
  for (const auto& [w, c] : input) {
    check_letters(w, pres);
    SiteWord s = w;
    std::stable_sort(s.begin(), s.end(),
                     [](const Letter& a, const Letter& b) { return a.site < b.site; });
    auto [it, inserted] = pending.try_emplace(std::move(s), c);
    if (!inserted) it->second += c;
  }
  NCPoly out(pres.tag());
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const SiteWord& w = node.key();
    const Coefficient& c = node.mapped();
    if (c.is_zero()) continue;
    const Rule* rule = nullptr;
    std::size_t pos = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].site != w[i + 1].site) continue;
      rule = pres.rule_for(w[i].gen, w[i + 1].gen);
      if (rule) {
        pos = i;
        break;
      }
    }
    if (!rule) {
      out.add_term(w, c);
      continue;
    }
    const auto site = w[pos].site;
    for (const auto& [rw, rc] : rule->rhs) {
      SiteWord nw;
      nw.reserve(w.size() + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
      for (GenId g : rw) nw.push_back(Letter{site, g});
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      auto [it, inserted] = pending.try_emplace(std::move(nw), c * rc);
      if (!inserted) it->second += c * rc;
    }
  }
  return out;
}

constexpr std::size_t kParallelThreshold = 64;

}  // namespace

NCPoly normal_form_serial(const NCPoly& p, const Presentation& pres) {
  check_tag(p, pres);
  return reduce_terms(p.terms(), pres);
}

NCPoly normal_form_parallel(const NCPoly& p, const Presentation& pres) {
  check_tag(p, pres);
  const int nthreads = omp_get_max_threads();
  if (nthreads <= 1 || p.size() < 2) return reduce_terms(p.terms(), pres);
  const std::size_t chunks = static_cast<std::size_t>(nthreads) * 4;
  std::vector<NCPoly::TermMap> parts(chunks);
  std::size_t i = 0;
  for (const auto& [w, c] : p.terms()) parts[i++ % chunks].emplace(w, c);
  std::vector<NCPoly> reduced(chunks);
  std::vector<std::string> errors(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < chunks; ++k) {
    try {
      reduced[k] = reduce_terms(parts[k], pres);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw ConfigError(e);
  // Fixed merge order keeps the result independent of scheduling.
  NCPoly out(pres.tag());
  for (const auto& r : reduced) out += r;
  return out;
}

NCPoly normal_form(const NCPoly& p, const Presentation& pres) {
  if (p.size() >= kParallelThreshold && !omp_in_parallel()) return normal_form_parallel(p, pres);
  return normal_form_serial(p, pres);
}

NCPoly mul(const NCPoly& a, const NCPoly& b, const Presentation& pres) {
  check_tag(a, pres);
  check_tag(b, pres);
  NCPoly prod = free_mul(a, b);
  prod.set_tag(pres.tag());
  return normal_form(prod, pres);
}

NCPoly mul(std::initializer_list<NCPoly> factors, const Presentation& pres) {
  NCPoly r = pres.one();
  for (const auto& f : factors) r = mul(r, f, pres);
  return r;
}

NCPoly pow(const NCPoly& a, int n, const Presentation& pres) {
  if (n < 0) throw DomainError("negative power of a polynomial");
  NCPoly r = pres.one();
  for (int i = 0; i < n; ++i) r = mul(r, a, pres);
  return r;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b, const Presentation& pres) {
  return mul(a, b, pres) - mul(b, a, pres);
}

NCPoly star(const NCPoly& p, const Presentation& pres) {
  check_tag(p, pres);
  if (!pres.has_star()) throw ConfigError(pres.name() + " has no star table");
  NCPoly r(pres.tag());
  const auto& conj = pres.conj_table();
  for (const auto& [w, c] : p.terms()) {
    check_letters(w, pres);
    SiteWord s(w.rbegin(), w.rend());
    for (auto& l : s) l.gen = conj[l.gen];
    r.add_term(std::move(s), c.conjugate());
  }
  return normal_form(r, pres);
}

CheckResult check_confluence(const Presentation& pres) {
  std::size_t overlaps = 0;
  std::vector<std::string> failures;
  std::size_t surviving = 0;
  auto local = [&](const std::vector<GenId>& prefix, const LocalPoly& mid,
                   const std::vector<GenId>& suffix) {
    NCPoly p(pres.tag());
    for (const auto& [w, c] : mid) {
      SiteWord s;
      for (GenId g : prefix) s.push_back(Letter{0, g});
      for (GenId g : w) s.push_back(Letter{0, g});
      for (GenId g : suffix) s.push_back(Letter{0, g});
      p.add_term(std::move(s), c);
    }
    return normal_form_serial(p, pres);
  };
  for (const Rule& r1 : pres.rules())
    for (const Rule& r2 : pres.rules()) {
      if (r1.right != r2.left) continue;
      ++overlaps;
      NCPoly one_way = local({}, r1.rhs, {r2.right});
      NCPoly other_way = local({r1.left}, r2.rhs, {});
      NCPoly diff = one_way - other_way;
      if (!diff.is_zero()) {
        surviving += diff.size();
        failures.push_back("(" + pres.generator_name(r1.left) + " " +
                           pres.generator_name(r1.right) + " " + pres.generator_name(r2.right) +
                           "): " + to_string(one_way, pres) + " != " + to_string(other_way, pres));
      }
    }
  std::string detail = std::to_string(overlaps) + " overlaps";
  if (!failures.empty())
    detail += "; first failing critical pair " + failures.front() + "; " +
              std::to_string(failures.size()) + " failing in total";
  return symbolic_result(surviving, detail);
}

std::vector<NCPoly> commutators_with_generators(const NCPoly& p, const Presentation& pres) {
  std::vector<NCPoly> out;
  const int sites = std::max(0, p.max_site()) + 1;
  for (int s = 0; s < sites; ++s)
    for (std::size_t g = 0; g < pres.generator_count(); ++g)
      out.push_back(commutator(
          p, NCPoly::letter(static_cast<GenId>(g), static_cast<std::uint16_t>(s), pres.tag()),
          pres));
  return out;
}

std::string to_string(const NCPoly& p, const Presentation& pres) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    if (!c.is_one() || w.empty()) out += "[" + c.to_string() + "]";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 || !c.is_one()) out += " ";
      out += pres.generator_name(w[i].gen) + "@" + std::to_string(w[i].site);
    }
  }
  return out;
}

}  // namespace qbax
