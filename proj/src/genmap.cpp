#include "qbax/genmap.hpp"

#include "qbax/error.hpp"

namespace qbax {

GenMap::GenMap(std::string name, PresentationPtr source, PresentationPtr target, int arity)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      arity_(arity),
      images_(source_->generator_count()) {
  if (arity != 1 && arity != 2) throw ConfigError("map arity must be 1 or 2");
}

void GenMap::set_image(std::string_view gen, NCPoly image) {
  if (image.tag() != 0 && image.tag() != target_->tag())
    throw ConfigError(name_ + ": image of " + std::string(gen) + " is not in " + target_->name());
  image.set_tag(target_->tag());
  if (image.max_site() >= arity_)
    throw ConfigError(name_ + ": image of " + std::string(gen) + " uses too many sites");
  images_[source_->gen(gen)] = normal_form(image, *target_);
}

std::vector<std::string> GenMap::uncovered() const {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < images_.size(); ++g)
    if (!images_[g]) out.push_back(source_->generator_name(static_cast<GenId>(g)));
  return out;
}

namespace {

NCPoly apply_impl(const GenMap& m, const NCPoly& p, int only_site) {
  if (p.tag() != 0 && p.tag() != m.source().tag())
    throw ConfigError(m.name() + ": argument is not in " + m.source().name());
  const Presentation& tgt = m.target();
  NCPoly out(tgt.tag());
  for (const auto& [w, c] : p.terms()) {
    NCPoly term = NCPoly::scalar(c, tgt.tag());
    for (const Letter& l : w) {
      NCPoly piece;
      if (only_site >= 0 && l.site != only_site) {
        if (&m.source() != &tgt) throw ConfigError(m.name() + ": site-local application needs an endomorphism");
        int site = l.site < only_site ? l.site : l.site + 1;
        piece = NCPoly::letter(l.gen, static_cast<std::uint16_t>(site), tgt.tag());
      } else {
        if (l.gen >= m.source().generator_count()) throw ConfigError("unknown generator id");
        const auto& img = m.image(l.gen);
        if (!img)
          throw PartialMapError(m.name() + " is not defined on generator " +
                                m.source().generator_name(l.gen));
        int offset = only_site >= 0 ? only_site : l.site * m.arity();
        piece = img->shifted(offset);
      }
      term = free_mul(term, piece);
    }
    out += term;
  }
  return normal_form(out, tgt);
}

}  // namespace

NCPoly apply_map(const GenMap& m, const NCPoly& p) { return apply_impl(m, p, -1); }

NCPoly transport(const NCPoly& p, const Presentation& from, const Presentation& to) {
  if (p.tag() != 0 && p.tag() != from.tag()) throw ConfigError("transport: argument is not in " + from.name());
  std::vector<GenId> image(from.generator_count());
  for (std::size_t g = 0; g < image.size(); ++g) image[g] = to.gen(from.generator_name(static_cast<GenId>(g)));
  NCPoly out(to.tag());
  for (const auto& [word, c] : p.terms()) {
    SiteWord w = word;
    for (auto& l : w) l.gen = image[l.gen];
    out.add_term(w, c);
  }
  return normal_form(out, to);
}

NCPoly apply_map_at(const GenMap& m, const NCPoly& p, int site) {
  if (m.arity() != 2) throw ConfigError(m.name() + ": apply_map_at needs an arity-2 map");
  return apply_impl(m, p, site);
}

CheckResult verify_hom(const GenMap& m) {
  const Presentation& src = m.source();
  std::size_t surviving = 0, checked = 0;
  std::vector<std::string> skipped, failing;
  for (const Rule& r : src.rules()) {
    bool covered = m.covers(r.left) && m.covers(r.right);
    for (const auto& [w, c] : r.rhs)
      for (GenId g : w) covered = covered && m.covers(g);
    if (!covered) {
      skipped.push_back(src.rule_label(r));
      continue;
    }
    ++checked;
    NCPoly img = apply_map(m, src.relation(r));
    if (!img.is_zero()) {
      surviving += img.size();
      failing.push_back(src.rule_label(r));
    }
  }
  std::string detail = std::to_string(checked) + " relations checked";
  if (!skipped.empty()) {
    detail += "; skipped (uncovered generators):";
    for (const auto& s : skipped) detail += " [" + s + "]";
  }
  if (!failing.empty()) {
    detail += "; failing:";
    for (const auto& s : failing) detail += " [" + s + "]";
  }
  return symbolic_result(surviving, detail);
}

CheckResult verify_coassoc(const GenMap& m) {
  if (m.arity() != 2 || &m.source() != &m.target())
    throw ConfigError(m.name() + ": coassociativity needs an arity-2 endomorphism");
  std::size_t surviving = 0;
  std::string detail;
  for (std::size_t g = 0; g < m.source().generator_count(); ++g) {
    if (!m.covers(static_cast<GenId>(g))) continue;
    const NCPoly& once = *m.image(static_cast<GenId>(g));
    NCPoly left = apply_map_at(m, once, 1);   // (id ⊗ m) m
    NCPoly right = apply_map_at(m, once, 0);  // (m ⊗ id) m
    NCPoly diff = left - right;
    if (!diff.is_zero()) {
      surviving += diff.size();
      detail += " " + m.source().generator_name(static_cast<GenId>(g));
    }
  }
  return symbolic_result(surviving, surviving ? "failing on" + detail : "all covered generators");
}

CheckResult verify_star_hom(const GenMap& m) {
  std::size_t surviving = 0;
  std::string detail;
  for (std::size_t g = 0; g < m.source().generator_count(); ++g) {
    GenId id = static_cast<GenId>(g);
    if (!m.covers(id)) continue;
    NCPoly x = NCPoly::letter(id, 0, m.source().tag());
    NCPoly lhs = star(*m.image(id), m.target());
    NCPoly sx = star(x, m.source());
    NCPoly rhs;
    try {
      rhs = apply_map(m, sx);
    } catch (const PartialMapError&) {
      continue;
    }
    NCPoly diff = lhs - rhs;
    if (!diff.is_zero()) {
      surviving += diff.size();
      detail += " " + m.source().generator_name(id);
    }
  }
  return symbolic_result(surviving, surviving ? "failing on" + detail : "all covered generators");
}

}  // namespace qbax
