#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_rep.hpp"
#include "qbax/catalog.hpp"
#include "qbax/error.hpp"
#include "qbax/identities.hpp"

using namespace qbax;
using namespace oracle;

namespace {

Mat kron(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

// Relation lhs - rhs with every generator replaced by a matrix.
Mat relation_value(const Presentation& pres, const Rule& r, const std::map<std::string, Mat>& img) {
  const int dim = static_cast<int>(img.begin()->second.rows());
  Mat out = Mat::Zero(dim, dim);
  const NCPoly rel = pres.relation(r);
  for (const auto& [w, c] : rel.terms()) {
    Mat m = Mat::Identity(dim, dim);
    for (const auto& l : w) m = m * img.at(pres.generator_name(l.gen));
    out += c.evaluate(at_q()) * m;
  }
  return out;
}

std::map<std::string, Mat> image_matrices(const GenMap& m, const std::map<std::string, Mat>& target_img) {
  std::map<std::string, Mat> out;
  for (std::size_t g = 0; g < m.source().generator_count(); ++g)
    if (m.covers(static_cast<GenId>(g)))
      out[m.source().generator_name(static_cast<GenId>(g))] =
          eval(*m.image(static_cast<GenId>(g)), m.target(), target_img, m.arity());
  return out;
}

}  // namespace

TEST_CASE("standard coproduct is the matrix coproduct") {
  auto img = glq2_images();
  auto D = image_matrices(build_map(MapId::Delta), img);
  const Mat &A = img["a"], &B = img["b"], &Cm = img["c"], &Dm = img["d"];
  CHECK((D["a"] - (kron(A, A) + kron(B, Cm))).norm() < 1e-12);
  CHECK((D["b"] - (kron(A, B) + kron(B, Dm))).norm() < 1e-12);
  CHECK((D["c"] - (kron(Cm, A) + kron(Dm, Cm))).norm() < 1e-12);
  CHECK((D["d"] - (kron(Cm, B) + kron(Dm, Dm))).norm() < 1e-12);
}

TEST_CASE("coproduct images satisfy the relations numerically") {
  for (MapId id : {MapId::Delta, MapId::delta}) {
    const GenMap& m = build_map(id);
    auto imgs = image_matrices(m, glq2_images());
    for (const Rule& r : m.source().rules()) {
      bool covered = m.covers(r.left) && m.covers(r.right);
      for (const auto& [w, c] : r.rhs)
        for (GenId g : w) covered = covered && m.covers(g);
      if (covered) CHECK(relation_value(m.source(), r, imgs).norm() < 1e-10);
    }
  }
}

TEST_CASE("D_q = a d - q b c is central in the oracle representation") {
  auto img = glq2_images();
  Mat D = img["a"] * img["d"] - kQ * img["b"] * img["c"];
  for (const auto& [n, M] : img) CHECK((D * M - M * D).norm() < 1e-11);
  auto pres = build_presentation(AlgebraId::GLq2);
  CHECK((eval(Dq(AlgebraId::GLq2), *pres, img, 1) - D).norm() < 1e-12);
}

TEST_CASE("every map is a homomorphism; partial maps name what they skip") {
  for (MapId id : kAllMaps) CHECK(verify_hom(build_map(id)).passed());
  CheckResult partial = verify_hom(build_map(MapId::DeltaWpoly));
  CHECK(partial.detail.find("skipped") != std::string::npos);
  auto w = build_presentation(AlgebraId::Wq);
  CHECK_THROWS_AS(apply_map(build_map(MapId::DeltaWpoly), w->g("vinv")), PartialMapError);
}

TEST_CASE("coassociativity, star compatibility and centrality") {
  for (MapId id : {MapId::Delta, MapId::delta, MapId::deltaA, MapId::deltaW})
    CHECK(verify_coassoc(build_map(id)).passed());
  for (MapId id : {MapId::Delta, MapId::delta, MapId::Q}) CHECK(verify_star_hom(build_map(id)).passed());
  for (const auto& e : central_elements()) CHECK(check_central(e).passed());
  auto pres = build_presentation(AlgebraId::GLq2);
  CHECK_FALSE(check_central({"ab", AlgebraId::GLq2, pres->word("a b")}).passed());
}

TEST_CASE("counits") {
  CHECK(counit_identity_Delta().passed());
  CounitAnalysis a = counit_analysis(build_map(MapId::delta));
  CHECK(a.contradiction);
  CHECK(verify_counit_absence().passed());
  CHECK(check_iota_involution().passed());
}

TEST_CASE("identity registry") {
  const auto& reg = identity_registry();
  CHECK(reg.size() >= 25);
  for (const auto& c : reg) {
    CheckResult r = run_identity(c);
    CHECK_MESSAGE(r.passed(), c.id);
    CHECK(r.residual_kind == "terms");
    CHECK_FALSE(c.anchor.empty());
  }
  CHECK(find_identity("fundr.Xdecomp.delta") != nullptr);
  CHECK_THROWS_AS(run_identity("no.such.identity"), ConfigError);
  CHECK(x_decomposition_uncorrected().size() == 4);
}
