#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbax/catalog.hpp"
#include "qbax/error.hpp"
#include "qbax/serialize.hpp"

using namespace qbax;

TEST_CASE("presentations round trip through text") {
  for (AlgebraId id : kAllAlgebras) {
    auto p = build_presentation(id);
    std::string text = write_presentation(*p);
    auto back = parse_presentation(text);
    CHECK(back->generators() == p->generators());
    CHECK(back->rules().size() == p->rules().size());
    CHECK(write_presentation(*back) == text);
    CHECK(check_confluence(*back).passed());
  }
}

TEST_CASE("hand-written presentation") {
  const char* text =
      "# two generators\n"
      "presentation Toy\n"
      "generators x y\n"
      "rule y x = [q^-1] x y\n"
      "end\n";
  auto p = parse_presentation(text);
  CHECK(p->generator_count() == 2);
  NCPoly yx = normal_form(p->word("y x"), *p);
  CHECK(yx == Coefficient::q_pow(-1) * p->word("x y"));
}

TEST_CASE("maps round trip and keep their images") {
  auto lookup = [](std::string_view name) -> PresentationPtr {
    auto id = algebra_from_name(name);
    if (!id) throw ConfigError("no algebra");
    return build_presentation(*id);
  };
  for (MapId id : kAllMaps) {
    const GenMap& m = build_map(id);
    GenMap back = parse_map(write_map(m), lookup);
    CHECK(back.arity() == m.arity());
    for (std::size_t g = 0; g < m.source().generator_count(); ++g) {
      auto gid = static_cast<GenId>(g);
      REQUIRE(back.covers(gid) == m.covers(gid));
      if (m.covers(gid)) CHECK(*back.image(gid) == *m.image(gid));
    }
    CHECK(verify_hom(back).passed());
  }
}

TEST_CASE("polynomial syntax") {
  auto p = build_presentation(AlgebraId::GLq2);
  NCPoly x = parse_ncpoly("[2] a@0 d@1 - b c + [q^-1]", *p);
  CHECK(x.size() == 3);
  CHECK(x.max_site() == 1);
  CHECK(parse_ncpoly("0", *p).is_zero());
  CHECK_THROWS(parse_ncpoly("a theta", *p));
  CHECK_THROWS(parse_presentation("presentation X\ngenerators a\nrule a b = a\nend\n"));
}
