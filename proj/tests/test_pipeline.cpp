#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "agr/matrix.h"
#include "agr/pipeline.h"
#include "doctest.h"

using namespace agr;

namespace {

std::string corpus_path(const std::string& name) {
  return std::string(AGR_CORPUS_DIR) + "/" + name;
}

Presentation corpus(const std::string& name) { return load_presentation(corpus_path(name)); }

ChainComplex<FunctionField> specialised(const Presentation& p,
                                        const AgrarianMap<FunctionField>& alpha) {
  return specialize(presentation_complex(p), alpha);
}

IntegralPolytope segment01(int rank, int axis) {
  LatticeGroup lattice(rank);
  return convex_hull(lattice, {lattice.zero(), lattice.basis(axis)});
}

PolytopeDifference point_class(int rank) {
  return difference_of(point_polytope(LatticeGroup(rank)), point_polytope(LatticeGroup(rank)));
}

}  // namespace

TEST_CASE("canonical maps attached to corpus presentations") {
  Presentation trefoil = corpus("trefoil.pres");
  AgrarianMap<FunctionField> alpha = abelianisation_map(trefoil);
  const FunctionField& F = alpha.field();
  CHECK(F.nvars() == 1);
  CHECK(alpha.kind() == MapKind::Abelianisation);
  CHECK(F.eq(alpha.image(0), F.parse("t^3")));
  CHECK(F.eq(alpha.image(1), F.parse("t^2")));
  alpha.check_relators(trefoil);

  AgrarianMap<FunctionField> z2 = abelianisation_map(corpus("z2.pres"));
  CHECK(z2.field().nvars() == 2);
  CHECK(z2.field().eq(z2.image(0), z2.field().parse("t1")));
  CHECK(z2.field().eq(z2.image(1), z2.field().parse("t2")));

  AgrarianMap<FunctionField> bs12 = abelianisation_map(corpus("bs12.pres"));
  CHECK(bs12.field().nvars() == 1);
  CHECK(bs12.field().eq(bs12.image(0), bs12.field().parse("t")));
  CHECK(bs12.field().eq(bs12.image(1), bs12.field().one()));

  AgrarianMap<FunctionField> klein = abelianisation_map(corpus("klein.pres"));
  CHECK(klein.field().eq(klein.image(0), klein.field().parse("t")));
  CHECK(klein.field().eq(klein.image(1), klein.field().one()));

  AgrarianMap<FunctionField> f2xz = abelianisation_map(corpus("f2xz.pres"));
  CHECK(f2xz.field().nvars() == 3);
  CHECK(f2xz.field().eq(f2xz.image(2), f2xz.field().parse("t3")));

  AgrarianMap<FunctionField> aug = augmentation_map(trefoil);
  CHECK(aug.field().nvars() == 0);
  CHECK(aug.kind() == MapKind::Augmentation);
  CHECK(aug.field().eq(aug.image(0), aug.field().one()));
}

TEST_CASE("golden trefoil pipeline") {
  Presentation p = corpus("trefoil.pres");
  AgrarianMap<FunctionField> alpha = abelianisation_map(p);
  PipelineReport report = run_pipeline(p, alpha);

  CHECK(report.acyclicity.acyclic);
  CHECK(report.consistency);
  REQUIRE(report.generators.size() == 2);

  const GeneratorCandidate& gx = report.generators[0];
  const GeneratorCandidate& gy = report.generators[1];
  CHECK(gx.admissible);
  CHECK(gy.admissible);
  CHECK_FALSE(gx.singular);
  CHECK_FALSE(gy.singular);
  // det A_x = -(t^4 + t^2 + 1) and det A_y = t^3 + 1, up to the documented
  // sign ambiguity of the representative; the polytopes are sign-free.
  CHECK(gx.det_polytope->vertices() == std::vector<LatticePoint>{{0}, {4}});
  CHECK(gx.letter_polytope->vertices() == std::vector<LatticePoint>{{0}, {3}});
  CHECK(gy.det_polytope->vertices() == std::vector<LatticePoint>{{0}, {3}});
  CHECK(gy.letter_polytope->vertices() == std::vector<LatticePoint>{{0}, {2}});

  CHECK(difference_equal(*gx.candidate, *gy.candidate, true));
  REQUIRE(report.agrarian_polytope.has_value());
  PolytopeDifference segment_class =
      difference_of(segment01(1, 0), point_polytope(LatticeGroup(1)));
  CHECK(difference_equal(*report.agrarian_polytope, segment_class, true));
  // The ring quotient det A_x / (alpha(x) - 1) is not a Laurent polynomial, so
  // no single-polytope form is reported even though the class is a segment.
  CHECK_FALSE(report.single_polytope.has_value());
}

TEST_CASE("golden torus pipeline") {
  Presentation p = corpus("z2.pres");
  AgrarianMap<FunctionField> alpha = abelianisation_map(p);
  PipelineReport report = run_pipeline(p, alpha);

  CHECK(report.acyclicity.acyclic);
  for (const auto& [degree, b] : report.acyclicity.per_degree) CHECK(b == 0);

  ChainComplex<FunctionField> c = specialised(p, alpha);
  TorsionValue<FunctionField> nf = torsion_normal_form(alpha.field(), torsion(c));
  CHECK(alpha.field().eq(nf.representative, alpha.field().one()));

  CHECK(report.consistency);
  CHECK(report.generators[0].admissible);
  CHECK(report.generators[1].admissible);
  CHECK(difference_equal(*report.generators[0].candidate, point_class(2), true));
  CHECK(difference_equal(*report.generators[1].candidate, point_class(2), true));
  CHECK(difference_equal(*report.agrarian_polytope, point_class(2), true));
  REQUIRE(report.single_polytope.has_value());
  CHECK(report.single_polytope->is_point());
}

TEST_CASE("BS(1,2) pipeline marks the trivial-image generator inadmissible") {
  Presentation p = corpus("bs12.pres");
  PipelineReport report = run_pipeline(p, abelianisation_map(p));
  const FunctionField& F = report.map.field();

  REQUIRE(report.generators.size() == 2);
  CHECK(report.generators[0].admissible);
  CHECK_FALSE(report.generators[1].admissible);
  CHECK_FALSE(report.generators[1].candidate.has_value());
  CHECK(F.eq(report.generators[0].determinant, F.parse("t - 2")));
  CHECK(report.consistency);
  // The class is trivial but the representative keeps the x-direction data.
  CHECK(difference_equal(*report.agrarian_polytope, point_class(1), false));
  CHECK(report.agrarian_polytope->plus.vertices() == std::vector<LatticePoint>{{0}, {1}});
  CHECK_FALSE(report.single_polytope.has_value());
}

TEST_CASE("direct product of a free group with the integers") {
  Presentation p = corpus("f2xz.pres");
  PipelineReport report = run_pipeline(p, abelianisation_map(p));

  CHECK(report.consistency);
  CHECK(report.generators[0].admissible);
  CHECK(report.generators[1].admissible);
  CHECK(report.generators[2].admissible);
  REQUIRE(report.single_polytope.has_value());
  // The fibre direction survives the quotient: a unit segment along z.
  CHECK(report.single_polytope->vertices() ==
        std::vector<LatticePoint>{{0, 0, 0}, {0, 0, 1}});
}

TEST_CASE("pipeline rejections") {
  Presentation f2 = corpus("f2_trivial.pres");
  try {
    run_pipeline(f2, abelianisation_map(f2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongDeficiency);
  }

  Presentation heavy = parse_presentation("gens: x\nrel: x^2\nrel: x^3\n");
  try {
    run_pipeline(heavy, abelianisation_map(heavy));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongDeficiency);
  }

  // A relator inside the second derived subgroup kills every Fox image, so
  // the specialised complex has b_1 = 1 and the deficiency-1 gate reports it.
  Presentation stubborn =
      parse_presentation("gens: x y\nrel: x y^2 X Y x Y X y^2 x Y X Y\n");
  try {
    run_pipeline(stubborn, abelianisation_map(stubborn));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAcyclic);
    CHECK(std::string(e.what()).find("b_1") != std::string::npos);
  }

  Presentation trefoil = corpus("trefoil.pres");
  FunctionField F(1);
  AgrarianMap<FunctionField> wrong(F, MapKind::Abelianisation, {F.parse("t"), F.parse("t")});
  try {
    run_pipeline(trefoil, wrong);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelatorNotKilled);
  }
}

TEST_CASE("torsion polytopes of small complexes") {
  FunctionField F(1);
  Matrix<FunctionField> d(F, 1, 1);
  d.at(0, 0) = F.parse("t - 1");
  ChainComplex<FunctionField> unit(F, 0, {1, 1}, {d});
  PolytopeDifference tp = torsion_polytope(unit);
  // Orientation convention: the polytope map consumes the inverse torsion, so
  // the two-term complex at degrees (1, 0) lands on the negated segment.
  CHECK(tp.plus.is_point());
  CHECK(tp.minus.vertices() == std::vector<LatticePoint>{{0}, {1}});

  ChainComplex<FunctionField> shifted = suspension(unit);
  PolytopeDifference tps = torsion_polytope(shifted);
  CHECK(tps.plus.vertices() == std::vector<LatticePoint>{{0}, {1}});
  CHECK(tps.minus.is_point());

  Presentation z2 = corpus("z2.pres");
  PolytopeDifference torus = torsion_polytope(specialised(z2, abelianisation_map(z2)));
  CHECK(difference_equal(torus, point_class(2), true));

  FunctionField Fu({"u"});
  FieldAutomorphism sigma(Fu, {Fu.parse("2*u")}, {Fu.parse("(u)/(2)")});
  SkewField K(Fu, sigma);
  Matrix<SkewField> ds(K, 1, 1);
  ds.at(0, 0) = K.sub(K.variable(), K.coeff_elem(Fu.parse("u")));
  ChainComplex<SkewField> skew_unit(K, 0, {1, 1}, {ds});
  PolytopeDifference skew_tp = torsion_polytope(skew_unit);
  CHECK(skew_tp.plus.is_point());
  CHECK(skew_tp.minus.vertices() == std::vector<LatticePoint>{{0}, {1}});

  Presentation f2 = corpus("f2_trivial.pres");
  try {
    torsion_polytope(specialised(f2, abelianisation_map(f2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAcyclic);
    CHECK(std::string(e.what()).find("b_1") != std::string::npos);
  }
}

TEST_CASE("pipeline polytope equals the torsion polytope across the corpus") {
  std::vector<std::string> deficiency_one{"z2.pres",     "trefoil.pres", "bs12.pres",
                                          "bs13.pres",   "bs23.pres",    "free_z.pres",
                                          "klein.pres",  "f2xz.pres"};
  for (const std::string& name : deficiency_one) {
    CAPTURE(name);
    Presentation p = corpus(name);
    AgrarianMap<FunctionField> alpha = abelianisation_map(p);
    PipelineReport report = run_pipeline(p, alpha);
    CHECK(report.consistency);
    REQUIRE(report.agrarian_polytope.has_value());

    PolytopeDifference tp = torsion_polytope(specialised(p, alpha));
    CHECK(difference_equal(tp, *report.agrarian_polytope, true));

    for (const GeneratorCandidate& rec : report.generators) {
      if (!rec.candidate) continue;
      CHECK(difference_equal(*rec.candidate, *report.agrarian_polytope, true));
    }
  }
}

TEST_CASE("pipeline accepts declared rational maps beyond the abelianisation") {
  Presentation z2 = corpus("z2.pres");
  FunctionField F(1);
  AgrarianMap<FunctionField> diagonal(F, MapKind::Abelianisation, {F.parse("t"), F.parse("t")});
  PipelineReport report = run_pipeline(z2, diagonal);
  CHECK(report.consistency);
  CHECK(report.generators[0].admissible);
  CHECK(report.generators[1].admissible);
  CHECK(difference_equal(*report.agrarian_polytope, point_class(1), true));

  PolytopeDifference tp = torsion_polytope(specialised(z2, diagonal));
  CHECK(difference_equal(tp, *report.agrarian_polytope, true));
}

TEST_CASE("bns queries against corpus markings") {
  Presentation z2 = corpus("z2.pres");
  PipelineReport rz2 = run_pipeline(z2, abelianisation_map(z2));
  MarkedPolytope mz2(convex_hull(LatticeGroup(2), {{0, 0}}), {0});
  for (const Character& phi :
       {Character{{Rational(1), Rational(0)}}, Character{{Rational(0), Rational(1)}},
        Character{{Rational(3), Rational(-2)}}, Character{{Rational(-1), Rational(-1)}}})
    CHECK(bns_query(rz2, phi, mz2));
  try {
    bns_query(rz2, Character{{Rational(0), Rational(0)}}, mz2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroCharacter);
  }
  MarkedPolytope wrong(convex_hull(LatticeGroup(2), {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), {0});
  try {
    bns_query(rz2, Character{{Rational(1), Rational(0)}}, wrong);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PolytopeMismatch);
  }

  Presentation bs12 = corpus("bs12.pres");
  PipelineReport rbs = run_pipeline(bs12, abelianisation_map(bs12));
  MarkedPolytope mbs(convex_hull(LatticeGroup(1), {{0}, {1}}), {0});
  CHECK(bns_query(rbs, Character{{Rational(1)}}, mbs));
  CHECK_FALSE(bns_query(rbs, Character{{Rational(-1)}}, mbs));
  CHECK(bns_query(rbs, Character{{Rational(2, 3)}}, mbs));

  Presentation f2xz = corpus("f2xz.pres");
  PipelineReport rf = run_pipeline(f2xz, abelianisation_map(f2xz));
  MarkedPolytope mf(convex_hull(LatticeGroup(3), {{0, 0, 0}, {0, 0, 1}}), {0, 1});
  CHECK(bns_query(rf, Character{{Rational(0), Rational(0), Rational(1)}}, mf));
  CHECK(bns_query(rf, Character{{Rational(0), Rational(0), Rational(-1)}}, mf));
  CHECK(bns_query(rf, Character{{Rational(1), Rational(0), Rational(3)}}, mf));
  CHECK_FALSE(bns_query(rf, Character{{Rational(1), Rational(0), Rational(0)}}, mf));
  CHECK_FALSE(bns_query(rf, Character{{Rational(1), Rational(2), Rational(0)}}, mf));
}
