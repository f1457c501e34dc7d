#include "qbax/coefficient.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "qbax/error.hpp"

namespace qbax {

namespace {
constexpr std::array<std::string_view, kParamCount> kNames = {"q", "lambda", "mu", "nu",
                                                              "s", "z",      "c",  "beta"};

Exponents zero_exponents() {
  Exponents e{};
  e.fill(0);
  return e;
}

std::int16_t checked_exp(long v) {
  if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
    throw DomainError("Laurent exponent out of range");
  return static_cast<std::int16_t>(v);
}
}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (kNames[i] == name) return static_cast<Param>(i);
  return std::nullopt;
}

ParamValues default_param_values() {
  ParamValues v;
  v.fill({1.0, 0.0});
  return v;
}

Coefficient::Coefficient(long n) {
  if (n != 0) terms_.emplace(zero_exponents(), mpq_class(n));
}

Coefficient::Coefficient(const mpq_class& r) {
  if (r != 0) terms_.emplace(zero_exponents(), r).first->second.canonicalize();
}

Coefficient Coefficient::monomial(Param p, int exponent, const mpq_class& c) {
  Exponents e = zero_exponents();
  e[static_cast<std::size_t>(p)] = checked_exp(exponent);
  return from_exponents(e, c);
}

Coefficient Coefficient::from_exponents(const Exponents& e, const mpq_class& c) {
  Coefficient r;
  if (c != 0) r.terms_.emplace(e, c).first->second.canonicalize();
  return r;
}

Coefficient Coefficient::varpi(const Coefficient& x) { return x - x.inverse(); }

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == zero_exponents() &&
         terms_.begin()->second == 1;
}

void Coefficient::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  mpq_class v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kParamCount; ++i) e[i] = checked_exp(long(ea[i]) + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }

Coefficient Coefficient::inverse() const {
  if (!is_monomial()) throw DomainError("inverse of a non-monomial Laurent polynomial");
  const auto& [e, c] = *terms_.begin();
  Exponents ne;
  for (std::size_t i = 0; i < kParamCount; ++i) ne[i] = checked_exp(-long(e[i]));
  return from_exponents(ne, 1 / c);
}

Coefficient Coefficient::pow(int k) const {
  Coefficient base = k < 0 ? inverse() : *this;
  Coefficient r(1);
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

Coefficient Coefficient::conjugate() const {
  Coefficient r;
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    e[0] = checked_exp(-long(e[0]));
    r.add_term(e, c);
  }
  return r;
}

Coefficient Coefficient::extract(Param p, int k) const {
  const auto i = static_cast<std::size_t>(p);
  Coefficient r;
  for (const auto& [key, c] : terms_)
    if (Exponents e = key; e[i] == k) {
      e[i] = 0;
      r.add_term(e, c);
    }
  return r;
}

Coefficient Coefficient::substitute(Param p, const Coefficient& mono) const {
  const auto i = static_cast<std::size_t>(p);
  Coefficient r;
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    const int k = e[i];
    e[i] = 0;
    r += from_exponents(e, c) * mono.pow(k);
  }
  return r;
}

int Coefficient::min_exponent(Param p) const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min<int>(m, e[static_cast<std::size_t>(p)]);
  return terms_.empty() ? 0 : m;
}

int Coefficient::max_exponent(Param p) const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max<int>(m, e[static_cast<std::size_t>(p)]);
  return terms_.empty() ? 0 : m;
}

bool Coefficient::depends_on(Param p) const {
  for (const auto& [e, c] : terms_)
    if (e[static_cast<std::size_t>(p)] != 0) return true;
  return false;
}

std::complex<double> Coefficient::evaluate(const ParamValues& v) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < kParamCount; ++i)
      if (e[i] != 0) t *= std::pow(v[i], static_cast<int>(e[i]));
    sum += t;
  }
  return sum;
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << kNames[i];
      if (e[i] != 1) out << "^" << e[i];
      wrote = true;
    }
    if (!wrote) out << "1";
  }
  return out.str();
}

namespace {
// expr := term (('+'|'-') term)* ; term := factor ('*'? factor)* ; factor := atom ('^' int)?
// atom := number | name | '(' expr ')'
class CoefParser {
 public:
  explicit CoefParser(std::string_view t) : text_(t) {}

  Coefficient parse_all() {
    Coefficient r = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("coefficient '" + std::string(text_) + "': " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  Coefficient expr() {
    Coefficient r;
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    } else if (peek('+')) {
      ++pos_;
    }
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    char ch = text_[pos_];
    return ch == '(' || std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  }

  Coefficient term() {
    Coefficient r = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        r *= factor();
      } else if (starts_factor()) {
        r *= factor();
      } else {
        return r;
      }
    }
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Coefficient factor() {
    Coefficient base = atom();
    if (peek('^')) {
      ++pos_;
      bool paren = peek('(');
      if (paren) ++pos_;
      long k = integer();
      if (paren) {
        if (!peek(')')) fail("expected ')'");
        ++pos_;
      }
      if (k < 0 && !base.is_monomial()) fail("negative power of a sum");
      base = base.pow(static_cast<int>(k));
    }
    return base;
  }

  Coefficient atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Coefficient r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      mpq_class v(std::string(text_.substr(start, pos_ - start)));
      v.canonicalize();
      return Coefficient(v);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto p = param_from_name(name);
      if (!p) fail("unknown parameter '" + std::string(name) + "'");
      return Coefficient::monomial(*p, 1);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};
}  // namespace

Coefficient Coefficient::parse(std::string_view text) { return CoefParser(text).parse_all(); }

}  // namespace qbax
