#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qbax/coefficient.hpp"
#include "qbax/error.hpp"

using namespace qbax;
using C = std::complex<double>;

namespace {

ParamValues random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 1.8), ph(-3.0, 3.0);
  ParamValues v;
  for (auto& x : v) x = std::polar(mag(rng), ph(rng));
  return v;
}

Coefficient random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-3, 3), n(-9, 9), d(1, 5), np(1, 4);
  Coefficient c;
  int terms = np(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents ex{};
    for (auto& x : ex) x = static_cast<std::int16_t>(e(rng) * (rng() % 3 == 0));
    c += Coefficient::from_exponents(ex, mpq_class(n(rng), d(rng)));
  }
  return c;
}

}  // namespace

TEST_CASE("ring operations agree with complex evaluation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Coefficient a = random_coefficient(rng), b = random_coefficient(rng);
    ParamValues v = random_point(rng);
    C va = a.evaluate(v), vb = b.evaluate(v);
    CHECK(std::abs((a + b).evaluate(v) - (va + vb)) < 1e-9);
    CHECK(std::abs((a - b).evaluate(v) - (va - vb)) < 1e-9);
    CHECK(std::abs((a * b).evaluate(v) - va * vb) < 1e-8 * (1 + std::abs(va * vb)));
    CHECK(std::abs(a.pow(3).evaluate(v) - va * va * va) < 1e-8 * (1 + std::abs(va * va * va)));
  }
}

TEST_CASE("cancellation leaves the zero coefficient") {
  Coefficient q = Coefficient::q_pow(1), qi = Coefficient::q_pow(-1);
  Coefficient x = (q - qi) * (q + qi) - (Coefficient::q_pow(2) - Coefficient::q_pow(-2));
  CHECK(x.is_zero());
  CHECK((q * qi).is_one());
}

TEST_CASE("monomial inverse and varpi") {
  Coefficient m = Coefficient::monomial(Param::lambda, 2, mpq_class(3, 4)) * Coefficient::q_pow(-1);
  CHECK((m * m.inverse()).is_one());
  CHECK_THROWS_AS((Coefficient::q_pow(1) + Coefficient(1)).inverse(), DomainError);
  ParamValues v = default_param_values();
  v[static_cast<std::size_t>(Param::q)] = C(1.3, 0.4);
  C q = v[0];
  CHECK(std::abs(Coefficient::varpi(Coefficient::q_pow(1)).evaluate(v) - (q - 1.0 / q)) < 1e-12);
}

TEST_CASE("conjugate inverts q only") {
  Coefficient a = Coefficient::q_pow(3) * Coefficient::monomial(Param::lambda, -1) + Coefficient(2);
  ParamValues v = default_param_values();
  v[0] = C(0.8, 0.3);
  v[1] = C(1.2, -0.1);
  ParamValues w = v;
  w[0] = 1.0 / v[0];
  CHECK(std::abs(a.conjugate().evaluate(v) - a.evaluate(w)) < 1e-12);
}

TEST_CASE("extract and substitute") {
  Coefficient lam = Coefficient::monomial(Param::lambda, 1);
  Coefficient a = Coefficient::q_pow(1) * lam.pow(2) + Coefficient(5) * lam.pow(-1) + Coefficient(2);
  CHECK(a.extract(Param::lambda, 2) == Coefficient::q_pow(1));
  CHECK(a.extract(Param::lambda, -1) == Coefficient(5));
  CHECK(a.extract(Param::lambda, 1).is_zero());
  CHECK(a.min_exponent(Param::lambda) == -1);
  CHECK(a.max_exponent(Param::lambda) == 2);
  Coefficient s = Coefficient::monomial(Param::s, 2);
  CHECK(s.substitute(Param::s, Coefficient::monomial(Param::mu, 1)) == Coefficient::monomial(Param::mu, 2));
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Coefficient a = random_coefficient(rng);
    CHECK(Coefficient::parse(a.to_string()) == a);
  }
  CHECK(Coefficient().to_string() == "0");
}
