#include "qbax/serialize.hpp"

#include <sstream>
#include <vector>

#include "qbax/error.hpp"

namespace qbax {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Top-level terms, keeping the sign that precedes each one.
std::vector<std::pair<bool, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<bool, std::string>> out;
  int depth = 0;
  bool neg = false;
  std::string cur;
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty()) out.emplace_back(neg, t);
    else if (neg) throw ParseError("dangling '-' in polynomial");
    cur.clear();
    neg = false;
  };
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced ']' in polynomial");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      bool starting = trim(cur).empty();
      if (ch == '-' && starting) {
        neg = !neg;
        continue;
      }
      if (starting) throw ParseError("empty term in polynomial");
      flush();
      neg = ch == '-';
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw ParseError("unbalanced '[' in polynomial");
  flush();
  return out;
}

std::string local_to_string(const LocalPoly& p, const Presentation& pres) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& [w, c] = p[i];
    if (i) out += " + ";
    bool bracket = !c.is_one() || w.empty();
    if (bracket) out += "[" + c.to_string() + "]";
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j || bracket) out += " ";
      out += pres.generator_name(w[j]);
    }
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> t;
  std::string s;
  while (in >> s) t.push_back(s);
  return t;
}

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const Presentation& pres) {
  NCPoly out(pres.tag());
  std::string t = trim(text);
  if (t == "0") return out;
  if (t.empty()) throw ParseError("empty polynomial");
  for (auto& [neg, term] : split_terms(t)) {
    Coefficient c(1);
    std::string rest = term;
    if (!rest.empty() && rest[0] == '[') {
      auto close = rest.find(']');
      c = Coefficient::parse(rest.substr(1, close - 1));
      rest = rest.substr(close + 1);
    }
    if (neg) c = -c;
    for (char& ch : rest)
      if (ch == '*') ch = ' ';
    SiteWord w;
    for (const auto& tok : tokens(rest)) {
      auto at = tok.find('@');
      std::string name = tok.substr(0, at);
      int site = 0;
      if (at != std::string::npos) {
        try {
          site = std::stoi(tok.substr(at + 1));
        } catch (const std::exception&) {
          throw ParseError("bad site in '" + tok + "'");
        }
        if (site < 0 || site > 65535) throw ParseError("bad site in '" + tok + "'");
      }
      auto g = pres.find(name);
      if (!g) throw ParseError("unknown generator '" + name + "' in " + pres.name());
      w.push_back(Letter{static_cast<std::uint16_t>(site), *g});
    }
    out.add_term(std::move(w), c);
  }
  return out;
}

std::string write_presentation(const Presentation& pres) {
  std::ostringstream out;
  out << "presentation " << pres.name() << "\n";
  out << "generators";
  for (const auto& g : pres.generators()) out << " " << g;
  out << "\n";
  for (const Rule& r : pres.rules()) {
    if (r.unit) continue;
    out << "rule " << pres.rule_label(r) << " = " << local_to_string(r.rhs, pres) << "\n";
  }
  for (auto [x, y] : pres.unit_pairs())
    out << "unit " << pres.generator_name(x) << " " << pres.generator_name(y) << "\n";
  if (pres.has_star())
    for (std::size_t g = 0; g < pres.generator_count(); ++g)
      out << "star " << pres.generators()[g] << " " << pres.generator_name(pres.conj_table()[g])
          << "\n";
  out << "end\n";
  return out.str();
}

PresentationPtr parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<PresentationBuilder> builder;
  std::vector<std::string> gens;
  struct PendingRule {
    std::string lhs, rhs;
  };
  std::vector<PendingRule> rules;
  std::vector<std::pair<std::string, std::string>> units, stars;
  bool ended = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto tok = tokens(t);
    const std::string& kw = tok[0];
    if (kw == "presentation") {
      if (tok.size() != 2) throw ParseError("expected: presentation NAME");
      builder.emplace(tok[1]);
    } else if (!builder) {
      throw ParseError("missing 'presentation' header");
    } else if (kw == "generators") {
      gens.assign(tok.begin() + 1, tok.end());
    } else if (kw == "rule") {
      auto eq = t.find('=');
      if (eq == std::string::npos) throw ParseError("rule without '=': " + t);
      rules.push_back({trim(t.substr(4, eq - 4)), trim(t.substr(eq + 1))});
    } else if (kw == "unit") {
      if (tok.size() != 3) throw ParseError("expected: unit X XINV");
      units.emplace_back(tok[1], tok[2]);
    } else if (kw == "star") {
      if (tok.size() != 3) throw ParseError("expected: star X IMAGE");
      stars.emplace_back(tok[1], tok[2]);
    } else if (kw == "end") {
      ended = true;
      break;
    } else {
      throw ParseError("unknown keyword '" + kw + "'");
    }
  }
  if (!builder || !ended) throw ParseError("presentation block not terminated by 'end'");
  builder->generators(gens);
  // Right sides are parsed against a relation-free scratch presentation.
  auto scratch = PresentationBuilder("scratch").generators(gens).build();
  for (const auto& r : rules) {
    NCPoly rhs = parse_ncpoly(r.rhs, *scratch);
    std::vector<std::pair<std::string, Coefficient>> terms;
    for (const auto& [w, c] : rhs.terms()) {
      std::string ws;
      for (const Letter& l : w) {
        if (l.site != 0) throw ParseError("rule right sides live on one site");
        ws += gens[l.gen] + " ";
      }
      terms.emplace_back(ws, c);
    }
    builder->rule(r.lhs, terms);
  }
  for (const auto& [x, y] : units) builder->unit(x, y);
  for (const auto& [x, y] : stars) builder->star(x, y);
  return builder->build();
}

std::string write_map(const GenMap& m) {
  std::ostringstream out;
  out << "map " << m.name() << " " << m.source().name() << " -> " << m.target().name()
      << " arity " << m.arity() << "\n";
  for (std::size_t g = 0; g < m.source().generator_count(); ++g) {
    GenId id = static_cast<GenId>(g);
    if (m.covers(id))
      out << "image " << m.source().generator_name(id) << " = "
          << to_string(*m.image(id), m.target()) << "\n";
  }
  for (const auto& u : m.uncovered()) out << "# uncovered " << u << "\n";
  out << "end\n";
  return out.str();
}

GenMap parse_map(std::string_view text, const PresentationLookup& lookup) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<GenMap> m;
  bool ended = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto tok = tokens(t);
    if (tok[0] == "map") {
      if (tok.size() != 7 || tok[3] != "->" || tok[5] != "arity")
        throw ParseError("expected: map NAME SRC -> TGT arity N");
      auto src = lookup(tok[2]);
      auto tgt = lookup(tok[4]);
      if (!src || !tgt) throw ParseError("unknown presentation in map header");
      m.emplace(tok[1], src, tgt, std::stoi(tok[6]));
    } else if (!m) {
      throw ParseError("missing 'map' header");
    } else if (tok[0] == "image") {
      auto eq = t.find('=');
      if (eq == std::string::npos || tok.size() < 3) throw ParseError("expected: image GEN = POLY");
      m->set_image(tok[1], parse_ncpoly(t.substr(eq + 1), m->target()));
    } else if (tok[0] == "end") {
      ended = true;
      break;
    } else {
      throw ParseError("unknown keyword '" + tok[0] + "'");
    }
  }
  if (!m || !ended) throw ParseError("map block not terminated by 'end'");
  return std::move(*m);
}

}  // namespace qbax
