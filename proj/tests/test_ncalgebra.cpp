#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qbax/catalog.hpp"
#include "qbax/error.hpp"
#include "qbax/presentation.hpp"
#include "oracle_rep.hpp"

using namespace qbax;

using namespace oracle;

namespace {

NCPoly random_poly(const Presentation& pres, std::mt19937_64& rng, int sites, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, static_cast<int>(pres.generator_count()) - 1),
      site(0, sites - 1), k(-2, 2), n(-5, 5);
  NCPoly p(pres.tag());
  for (int t = 0; t < 4; ++t) {
    SiteWord w;
    int L = len(rng);
    for (int i = 0; i < L; ++i)
      w.push_back({static_cast<std::uint16_t>(site(rng)), static_cast<GenId>(gen(rng))});
    p.add_term(w, Coefficient::q_pow(k(rng)) * Coefficient(n(rng)));
  }
  return p;
}

void check_against_rep(AlgebraId id, const std::map<std::string, Mat>& img, int sites, std::uint64_t seed) {
  auto pres = build_presentation(id);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    NCPoly p = random_poly(*pres, rng, sites, 5);
    NCPoly nf = normal_form(p, *pres);
    worst = std::max(worst, (eval(p, *pres, img, sites) - eval(nf, *pres, img, sites)).norm());
  }
  CHECK(worst < 1e-9);
}

}  // namespace

TEST_CASE("oracle representations satisfy the defining relations") {
  for (AlgebraId id : {AlgebraId::GLq2, AlgebraId::GLq2Ext, AlgebraId::GLq2ExtPrime}) {
    auto pres = build_presentation(id);
    auto img = glq2_images();
    for (const Rule& r : pres->rules()) CHECK(eval(pres->relation(r), *pres, img, 1).norm() < 1e-12);
  }
  auto w = build_presentation(AlgebraId::Wq);
  for (const Rule& r : w->rules()) CHECK(eval(w->relation(r), *w, weyl_images(), 1).norm() < 1e-12);
}

TEST_CASE("normal form preserves the value in a faithful-enough representation") {
  check_against_rep(AlgebraId::GLq2, glq2_images(), 1, 1);
  check_against_rep(AlgebraId::GLq2Ext, glq2_images(), 1, 2);
  check_against_rep(AlgebraId::GLq2ExtPrime, glq2_images(), 1, 3);
  check_against_rep(AlgebraId::Wq, weyl_images(), 1, 4);
  check_against_rep(AlgebraId::GLq2, glq2_images(), 2, 5);
  check_against_rep(AlgebraId::Wq, weyl_images(), 2, 6);
}

TEST_CASE("normal forms are PBW-ordered and idempotent") {
  auto pres = build_presentation(AlgebraId::GLq2Ext);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    NCPoly nf = normal_form(random_poly(*pres, rng, 2, 6), *pres);
    CHECK(normal_form(nf, *pres) == nf);
    for (const auto& [w, c] : nf.terms())
      for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1].site == w[k].site) CHECK(pres->rule_for(w[k - 1].gen, w[k].gen) == nullptr);
  }
}

TEST_CASE("units cancel") {
  auto pres = build_presentation(AlgebraId::GLq2ExtPrime);
  CHECK(normal_form(pres->word("b theta"), *pres) == pres->one());
  CHECK(normal_form(pres->word("theta b"), *pres) == pres->one());
  auto w = build_presentation(AlgebraId::Wq);
  CHECK(normal_form(w->word("u v vinv"), *w) == w->g("u"));
}

TEST_CASE("serial and parallel normal forms agree") {
  auto pres = build_presentation(AlgebraId::GLq2Ext);
  std::mt19937_64 rng(13);
  NCPoly big(pres->tag());
  for (int i = 0; i < 20; ++i) big += random_poly(*pres, rng, 3, 7);
  CHECK(normal_form_serial(big, *pres) == normal_form_parallel(big, *pres));
}

TEST_CASE("confluence of shipped presentations and of a broken one") {
  for (AlgebraId id : kAllAlgebras) CHECK(check_confluence(*build_presentation(id)).passed());
  auto broken = build_presentation(AlgebraId::GLq2)->without_rule("c", "b");
  CheckResult r = check_confluence(*broken);
  CHECK_FALSE(r.passed());
  CHECK(r.detail.find("critical pair") != std::string::npos);
}

TEST_CASE("commutator and star") {
  auto pres = build_presentation(AlgebraId::GLq2);
  NCPoly ab = commutator(pres->g("a"), pres->g("b"), *pres);
  CHECK(ab == normal_form((Coefficient(1) - Coefficient::q_pow(-1)) * pres->word("a b"), *pres));
  CHECK(commutator(pres->g("b"), pres->g("c"), *pres).is_zero());
  NCPoly x = Coefficient::q_pow(2) * pres->word("b a");
  CHECK(star(star(x, *pres), *pres) == normal_form(x, *pres));
}

TEST_CASE("builder rejects bad input") {
  PresentationBuilder b("bad");
  b.generators({"x", "y"});
  CHECK_THROWS_AS(b.rule("x z", {{"z x", 1}}), ConfigError);
  CHECK_THROWS_AS(build_presentation(AlgebraId::GLq2)->gen("theta"), ConfigError);
}
