#pragma once
// Exact Laurent polynomials over Q in the central parameters.
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qbax {

// s is a square root of lambda, used by the sigma_3/2 twists.
enum class Param : std::uint8_t { q, lambda, mu, nu, s, z, c, beta };
inline constexpr std::size_t kParamCount = 8;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

using Exponents = std::array<std::int16_t, kParamCount>;
using ParamValues = std::array<std::complex<double>, kParamCount>;

ParamValues default_param_values();

class Coefficient {
 public:
  using TermMap = std::map<Exponents, mpq_class>;

  Coefficient() = default;
  Coefficient(long n);  // NOLINT: implicit integer constants are convenient
  explicit Coefficient(const mpq_class& r);

  static Coefficient monomial(Param p, int exponent, const mpq_class& c = 1);
  static Coefficient from_exponents(const Exponents& e, const mpq_class& c = 1);
  static Coefficient q_pow(int k) { return monomial(Param::q, k); }
  /// x - 1/x for a monomial x.
  static Coefficient varpi(const Coefficient& x);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient operator-() const;
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// Inverse of a monomial; throws DomainError otherwise.
  Coefficient inverse() const;
  Coefficient pow(int k) const;

  /// q -> 1/q, everything else fixed.
  Coefficient conjugate() const;

  /// Terms whose exponent of p equals k, with p removed.
  Coefficient extract(Param p, int k) const;
  /// Replace p^k by mono^k for a monomial mono.
  Coefficient substitute(Param p, const Coefficient& mono) const;
  int min_exponent(Param p) const;
  int max_exponent(Param p) const;
  bool depends_on(Param p) const;

  std::complex<double> evaluate(const ParamValues& v) const;

  std::string to_string() const;
  static Coefficient parse(std::string_view text);

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  TermMap terms_;
};

}  // namespace qbax
