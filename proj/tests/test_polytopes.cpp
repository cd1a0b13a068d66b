#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "agr/polytope.h"
#include "doctest.h"

using namespace agr;

namespace {

SkewField demo_field() {
  FunctionField F({"u"});
  FieldAutomorphism sigma(F, {F.parse("2*u")}, {F.parse("(u)/(2)")});
  return SkewField(F, sigma);
}

Character chi(std::vector<long> coeffs) {
  Character phi;
  for (long c : coeffs) phi.coefficients.push_back(Rational(c));
  return phi;
}

IntegralPolytope rand_polytope(std::mt19937& rng, const LatticeGroup& lattice, int npts,
                               long long bound = 4) {
  std::uniform_int_distribution<long long> c(-bound, bound);
  std::uniform_int_distribution<int> n(1, npts);
  std::vector<LatticePoint> pts;
  int count = n(rng);
  for (int i = 0; i < count; ++i) {
    LatticePoint p(static_cast<size_t>(lattice.rank));
    for (long long& x : p) x = c(rng);
    pts.push_back(std::move(p));
  }
  return convex_hull(lattice, std::move(pts));
}

Character rand_character(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  Character phi;
  for (int i = 0; i < rank; ++i) phi.coefficients.push_back(Rational(num(rng), den(rng)));
  return phi;
}

RationalFunction rand_rf(std::mt19937& rng, const FunctionField& F) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), terms(1, 3);
  RationalFunction r = F.zero();
  int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    RationalFunction m = F.constant(Rational(c(rng)));
    for (int v = 0; v < F.nvars(); ++v) m = m * F.variable(v, e(rng));
    r = r + m;
  }
  return r;
}

RationalFunction nonzero_rf(std::mt19937& rng, const FunctionField& F) {
  std::uniform_int_distribution<int> frac(0, 2);
  for (;;) {
    RationalFunction r = rand_rf(rng, F);
    if (r.num().is_zero()) continue;
    if (frac(rng) == 0) {
      RationalFunction d = rand_rf(rng, F);
      if (!d.num().is_zero()) r = r / d;
    }
    return r;
  }
}

MultiPoly rand_poly(std::mt19937& rng, int nvars) {
  for (;;) {
    MultiPoly p = rand_rf(rng, FunctionField(nvars)).num();
    if (!p.is_zero()) return p;
  }
}

TwistedElement rand_elem(std::mt19937& rng, const TwistDescriptor& t, int max_terms = 3) {
  std::uniform_int_distribution<int> terms(1, max_terms), coord(-2, 2), c(-3, 3);
  TwistedElement r = TwistedElement::zero(t);
  int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    LatticePoint p(static_cast<size_t>(t.group().rank));
    for (long long& x : p) x = coord(rng);
    int cv = c(rng);
    if (cv == 0) cv = 1;
    r = r + TwistedElement::term(t, p, t.field().constant(Rational(cv)));
  }
  return r;
}

TwistedElement nonzero_elem(std::mt19937& rng, const TwistDescriptor& t, int max_terms = 3) {
  for (;;) {
    TwistedElement r = rand_elem(rng, t, max_terms);
    if (!r.coeffs().empty()) return r;
  }
}

SkewPoly rand_skew_poly(std::mt19937& rng, const SkewField& K) {
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2), picku(0, 2), terms(1, 2);
  const FunctionField& F = K.coeff_field();
  SkewPoly p(K.context());
  int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    RationalFunction coeff = F.constant(Rational(c(rng) == 0 ? 1 : c(rng)));
    if (picku(rng) == 0) coeff = coeff * F.variable(0, 1);
    p += SkewPoly::monomial(K.context(), e(rng), coeff);
  }
  return p;
}

SkewFraction rand_skew_fraction(std::mt19937& rng, const SkewField& K) {
  for (;;) {
    SkewPoly num = rand_skew_poly(rng, K), den = rand_skew_poly(rng, K);
    if (num.is_zero() || den.is_zero()) continue;
    return SkewFraction(num, den);
  }
}

}  // namespace

TEST_CASE("convex hulls keep exactly the extreme points") {
  LatticeGroup L1(1), L2(2);

  IntegralPolytope origin = convex_hull(L1, {{0}});
  CHECK(origin.is_point());
  CHECK(origin.vertices() == std::vector<LatticePoint>{{0}});
  CHECK(origin == point_polytope(L1));

  IntegralPolytope seg = convex_hull(L1, {{0}, {1}, {2}});
  CHECK(seg.vertices() == std::vector<LatticePoint>{{0}, {2}});

  IntegralPolytope square = convex_hull(
      L2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {1, 1}, {2, 2}});
  CHECK(square.vertices() == std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});

  IntegralPolytope everything = convex_hull(LatticeGroup(0), {{}, {}});
  CHECK(everything.is_point());
  CHECK(everything.vertices() == std::vector<LatticePoint>{{}});

  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> c(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 12; ++i) pts.push_back({c(rng), c(rng)});
    std::vector<LatticePoint> shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(convex_hull(L2, pts) == convex_hull(L2, shuffled));
  }

  try {
    convex_hull(L1, {});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
  try {
    convex_hull(L2, {{1}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LatticeMismatch);
  }
}

TEST_CASE("hulls in rank three and beyond filter extreme points exactly") {
  LatticeGroup L3(3), L4(4);

  std::vector<LatticePoint> cube;
  for (long long x : {0, 2})
    for (long long y : {0, 2})
      for (long long z : {0, 2}) cube.push_back({x, y, z});
  std::vector<LatticePoint> padded = cube;
  padded.push_back({1, 1, 1});
  for (const LatticePoint& f :
       {LatticePoint{1, 1, 0}, {1, 1, 2}, {1, 0, 1}, {1, 2, 1}, {0, 1, 1}, {2, 1, 1}})
    padded.push_back(f);
  std::vector<LatticePoint> expected = cube;
  std::sort(expected.begin(), expected.end());
  CHECK(convex_hull(L3, padded).vertices() == expected);

  IntegralPolytope octa = convex_hull(L3, {{2, 0, 0},
                                           {-2, 0, 0},
                                           {0, 2, 0},
                                           {0, -2, 0},
                                           {0, 0, 2},
                                           {0, 0, -2},
                                           {0, 0, 0},
                                           {1, 0, 0}});
  CHECK(octa.vertices().size() == 6);

  IntegralPolytope planar = convex_hull(L3, {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {0, 2, 0}});
  CHECK(planar.vertices() == std::vector<LatticePoint>{{0, 0, 0}, {0, 2, 0}, {2, 2, 0}});

  IntegralPolytope simplex = convex_hull(L4, {{0, 0, 0, 0},
                                              {4, 0, 0, 0},
                                              {0, 4, 0, 0},
                                              {0, 0, 4, 0},
                                              {0, 0, 0, 4},
                                              {1, 1, 1, 1}});
  CHECK(simplex.vertices().size() == 5);
}

TEST_CASE("minkowski sums follow vertex arithmetic") {
  LatticeGroup L1(1), L2(2);
  IntegralPolytope segx = convex_hull(L2, {{0, 0}, {1, 0}});
  IntegralPolytope segy = convex_hull(L2, {{0, 0}, {0, 1}});

  CHECK(minkowski_sum(segx, point_polytope(L2)) == segx);
  CHECK(minkowski_sum(segx, segy) ==
        convex_hull(L2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(minkowski_sum(convex_hull(L1, {{0}, {1}}), convex_hull(L1, {{0}, {2}})) ==
        convex_hull(L1, {{0}, {3}}));

  try {
    minkowski_sum(segx, point_polytope(L1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LatticeMismatch);
  }

  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    IntegralPolytope a = rand_polytope(rng, L2, 6), b = rand_polytope(rng, L2, 6),
                     c = rand_polytope(rng, L2, 6);
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));

    // Every vertex of the sum decomposes as a vertex of a plus a vertex of b.
    IntegralPolytope sum = minkowski_sum(a, b);
    for (const LatticePoint& v : sum.vertices()) {
      bool found = false;
      for (const LatticePoint& u : a.vertices())
        for (const LatticePoint& w : b.vertices())
          if (v == LatticePoint{u[0] + w[0], u[1] + w[1]}) found = true;
      CHECK(found);
    }
  }

  LatticeGroup L3(3);
  for (int trial = 0; trial < 8; ++trial) {
    IntegralPolytope a = rand_polytope(rng, L3, 4, 2), b = rand_polytope(rng, L3, 4, 2),
                     c = rand_polytope(rng, L3, 4, 2);
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
  }

  // Cancellativity: adding r preserves distinctness both ways.
  for (int trial = 0; trial < 40; ++trial) {
    IntegralPolytope p = rand_polytope(rng, L2, 5), q = rand_polytope(rng, L2, 5),
                     r = rand_polytope(rng, L2, 5);
    CHECK((minkowski_sum(p, r) == minkowski_sum(q, r)) == (p == q));
  }
}

TEST_CASE("polytope differences form a cancellative group") {
  LatticeGroup L1(1), L2(2);
  IntegralPolytope pt = point_polytope(L1);
  IntegralPolytope seg01 = convex_hull(L1, {{0}, {1}});
  IntegralPolytope seg02 = convex_hull(L1, {{0}, {2}});
  IntegralPolytope seg12 = convex_hull(L1, {{1}, {2}});

  PolytopeDifference x = difference_of(seg02, seg01);
  PolytopeDifference y = difference_of(seg01, pt);
  CHECK(difference_equal(x, x, false));
  CHECK(difference_equal(x, y, false));
  CHECK(difference_equal(y, x, false));

  PolytopeDifference a = difference_of(seg01, pt);
  PolytopeDifference b = difference_of(seg12, pt);
  CHECK_FALSE(difference_equal(a, b, false));
  CHECK(difference_equal(a, b, true));

  try {
    difference_equal(a, difference_of(point_polytope(L2), point_polytope(L2)), false);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LatticeMismatch);
  }
  try {
    difference_of(seg01, point_polytope(L2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LatticeMismatch);
  }

  std::mt19937 rng(37);
  PolytopeDifference zero = difference_of(point_polytope(L2), point_polytope(L2));
  for (int trial = 0; trial < 20; ++trial) {
    IntegralPolytope p = rand_polytope(rng, L2, 5), q = rand_polytope(rng, L2, 5),
                     r = rand_polytope(rng, L2, 5), s = rand_polytope(rng, L2, 5);
    PolytopeDifference u = difference_of(p, q), v = difference_of(r, s);

    CHECK(difference_equal(u, u, false));
    // Translating both sides of a difference is invisible to the relation.
    PolytopeDifference shifted =
        difference_of(translated(p, {3, -1}), translated(q, {3, -1}));
    CHECK(difference_equal(u, shifted, false));
    CHECK(difference_equal(shifted, u, false));

    // Transitivity through a third representative.
    PolytopeDifference third = difference_of(minkowski_sum(p, s), minkowski_sum(q, s));
    CHECK(difference_equal(shifted, third, false));
    CHECK(difference_equal(u, third, false));

    CHECK(difference_equal(difference_sum(u, v), difference_sum(v, u), false));
    PolytopeDifference w = difference_of(rand_polytope(rng, L2, 4), rand_polytope(rng, L2, 4));
    CHECK(difference_equal(difference_sum(difference_sum(u, v), w),
                           difference_sum(u, difference_sum(v, w)), false));

    CHECK(difference_equal(difference_sum(u, zero), u, false));
    PolytopeDifference inverse = difference_of(q, p);
    CHECK(difference_equal(difference_sum(u, inverse), zero, false));

    // Cancellation: (p + r) - r recovers p.
    CHECK(difference_equal(difference_of(minkowski_sum(p, r), r),
                           difference_of(p, point_polytope(L2)), false));

    // Modulo translation is implied by exact equality and survives shifts of
    // one side only.
    CHECK(difference_equal(u, third, true));
    PolytopeDifference lopsided = difference_of(translated(p, {1, 2}), q);
    CHECK(difference_equal(u, lopsided, true));
  }
}

TEST_CASE("phi faces select the minimising vertices") {
  LatticeGroup L2(2);
  IntegralPolytope square = convex_hull(L2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  CHECK(phi_face(square, chi({0, 0})) == square);
  CHECK(phi_face(square, chi({1, 0})).vertices() ==
        std::vector<LatticePoint>{{0, 0}, {0, 1}});
  CHECK(phi_face(square, chi({1, 1})).vertices() == std::vector<LatticePoint>{{0, 0}});
  CHECK(phi_face(square, chi({-1, 0})).vertices() ==
        std::vector<LatticePoint>{{1, 0}, {1, 1}});

  Character mixed;
  mixed.coefficients = {Rational(1, 2), Rational(1, 3)};
  CHECK(phi_face(square, mixed).vertices() == std::vector<LatticePoint>{{0, 0}});

  try {
    phi_face(square, chi({1}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LatticeMismatch);
  }

  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    IntegralPolytope p = rand_polytope(rng, L2, 6), q = rand_polytope(rng, L2, 6);
    Character phi = rand_character(rng, 2);
    IntegralPolytope face = phi_face(p, phi);
    CHECK(phi_face(face, phi) == face);
    CHECK(phi_face(minkowski_sum(p, q), phi) ==
          minkowski_sum(phi_face(p, phi), phi_face(q, phi)));
  }
}

TEST_CASE("vertex dual cones describe the strict minimisers") {
  LatticeGroup L1(1), L2(2);

  VertexDualCone improper = vertex_dual_cone(point_polytope(L1), {0});
  CHECK(improper.normals.empty());
  CHECK(improper.contains(chi({5})));
  CHECK(improper.contains(chi({-5})));

  IntegralPolytope seg = convex_hull(L1, {{0}, {1}});
  VertexDualCone at0 = vertex_dual_cone(seg, {0});
  VertexDualCone at1 = vertex_dual_cone(seg, {1});
  CHECK(at0.contains(chi({1})));
  CHECK_FALSE(at0.contains(chi({-1})));
  CHECK_FALSE(at0.contains(chi({0})));
  CHECK(at1.contains(chi({-1})));
  CHECK_FALSE(at1.contains(chi({1})));

  IntegralPolytope square = convex_hull(L2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  VertexDualCone corner = vertex_dual_cone(square, {0, 0});
  CHECK(corner.contains(chi({1, 2})));
  CHECK(corner.contains(chi({2, 1})));
  CHECK_FALSE(corner.contains(chi({1, 0})));
  CHECK_FALSE(corner.contains(chi({0, -1})));
  CHECK_FALSE(corner.contains(chi({-1, -1})));

  try {
    vertex_dual_cone(square, {2, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAVertex);
  }
  try {
    vertex_dual_cone(square, {2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LatticeMismatch);
  }
  try {
    vertex_dual_cone(convex_hull(LatticeGroup(4), {{0, 0, 0, 0}, {1, 0, 0, 0}}),
                     {0, 0, 0, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankTooLargeForFaces);
  }

  // A character lies in the cone of v exactly when its face is the single
  // vertex v, so the open cones partition the generic characters.
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    IntegralPolytope p = rand_polytope(rng, L2, 6);
    Character phi = rand_character(rng, 2);
    if (phi.is_zero()) continue;
    IntegralPolytope face = phi_face(p, phi);
    int inside = 0;
    for (const LatticePoint& v : p.vertices())
      if (vertex_dual_cone(p, v).contains(phi)) ++inside;
    CHECK(inside == (face.is_point() ? 1 : 0));
    if (face.is_point())
      CHECK(vertex_dual_cone(p, face.vertices().front()).contains(phi));
  }
}

TEST_CASE("marked polytopes answer membership through faces") {
  LatticeGroup L1(1), L2(2);
  IntegralPolytope seg = convex_hull(L1, {{0}, {1}});
  IntegralPolytope square = convex_hull(L2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  MarkedPolytope unmarked(seg, {});
  CHECK_FALSE(marked_membership(unmarked, chi({1})));
  CHECK_FALSE(marked_membership(unmarked, chi({-1})));

  MarkedPolytope left(seg, {0});
  CHECK(marked_membership(left, chi({1})));
  CHECK_FALSE(marked_membership(left, chi({-1})));

  MarkedPolytope both(seg, {1, 0, 1});
  CHECK(both.marked() == std::vector<int>{0, 1});
  CHECK(marked_membership(both, chi({1})));
  CHECK(marked_membership(both, chi({-1})));

  MarkedPolytope corner(square, {0});
  CHECK(marked_membership(corner, chi({1, 1})));
  CHECK_FALSE(marked_membership(corner, chi({1, 0})));
  CHECK_FALSE(marked_membership(corner, chi({-1, -1})));

  try {
    marked_membership(corner, chi({0, 0}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroCharacter);
  }
  try {
    MarkedPolytope(seg, {7});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAVertex);
  }

  // Marking a single vertex turns membership into its dual cone test.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    IntegralPolytope p = rand_polytope(rng, L2, 6);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(p.vertices().size()) - 1);
    int index = pick(rng);
    MarkedPolytope m(p, {index});
    Character phi = rand_character(rng, 2);
    if (phi.is_zero()) continue;
    CHECK(marked_membership(m, phi) ==
          vertex_dual_cone(p, p.vertices()[static_cast<size_t>(index)]).contains(phi));
  }
}

TEST_CASE("newton polytopes of ring elements") {
  FunctionField F1(1), F2(2);

  CHECK(newton_polytope(MultiPoly::constant(2, Rational(1))) == point_polytope(LatticeGroup(2)));
  CHECK(newton_polytope(F1.parse("t - 2").num()).vertices() ==
        std::vector<LatticePoint>{{0}, {1}});
  CHECK(newton_polytope(F2.parse("t1^2*t2 + t1*t2 + 3").num()).vertices() ==
        std::vector<LatticePoint>{{0, 0}, {1, 1}, {2, 1}});
  CHECK(newton_polytope(F2.parse("t1^2*t2^2 + t1*t2 + 1").num()).vertices() ==
        std::vector<LatticePoint>{{0, 0}, {2, 2}});

  SkewField K = demo_field();
  SkewPoly cubic = SkewPoly::monomial(K.context(), 3, K.coeff_field().one()) +
                   SkewPoly::monomial(K.context(), 1, K.coeff_field().parse("u"));
  CHECK(newton_polytope(cubic).vertices() == std::vector<LatticePoint>{{1}, {3}});

  TwistDescriptor t(FunctionField(0), 2);
  TwistedElement e = TwistedElement::term(t, {0, 0}, t.field().one()) +
                     TwistedElement::term(t, {1, 1}, t.field().one()) +
                     TwistedElement::term(t, {2, 2}, t.field().one());
  CHECK(newton_polytope(e).vertices() == std::vector<LatticePoint>{{0, 0}, {2, 2}});

  try {
    newton_polytope(MultiPoly(2));
    CHECK(false);
  } catch (const Error& e2) {
    CHECK(e2.code() == ErrorCode::ZeroElement);
  }
  try {
    newton_polytope(TwistedElement::zero(t));
    CHECK(false);
  } catch (const Error& e2) {
    CHECK(e2.code() == ErrorCode::ZeroElement);
  }
  try {
    polytope_hom(F2.zero());
    CHECK(false);
  } catch (const Error& e2) {
    CHECK(e2.code() == ErrorCode::ZeroElement);
  }

  PolytopeDifference h = polytope_hom(F1.parse("(t^2 - 1)/(t - 3)"));
  CHECK(h.plus.vertices() == std::vector<LatticePoint>{{0}, {2}});
  CHECK(h.minus.vertices() == std::vector<LatticePoint>{{0}, {1}});
}

TEST_CASE("the polytope map is a homomorphism on nonzero elements") {
  std::mt19937 rng(53);
  FunctionField F2(2);

  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly p = rand_poly(rng, 2), q = rand_poly(rng, 2);
    CHECK(newton_polytope(p * q) == minkowski_sum(newton_polytope(p), newton_polytope(q)));
  }

  for (int trial = 0; trial < 150; ++trial) {
    RationalFunction x = nonzero_rf(rng, F2), y = nonzero_rf(rng, F2);
    CHECK(difference_equal(polytope_hom(x * y),
                           difference_sum(polytope_hom(x), polytope_hom(y)), false));
  }

  FunctionField F0(0);
  TwistDescriptor plain(F0, 2);
  TwistDescriptor sign(F0, 2, {{F0.one(), -F0.one()}, {F0.one(), F0.one()}});
  for (const TwistDescriptor& t : {plain, sign}) {
    for (int trial = 0; trial < 30; ++trial) {
      TwistedElement p = nonzero_elem(rng, t), q = nonzero_elem(rng, t);
      CHECK(newton_polytope(p * q) ==
            minkowski_sum(newton_polytope(p), newton_polytope(q)));
    }
  }

  SkewField K = demo_field();
  for (int trial = 0; trial < 60; ++trial) {
    SkewFraction x = rand_skew_fraction(rng, K), y = rand_skew_fraction(rng, K);
    CHECK(difference_equal(polytope_hom(K.mul(x, y)),
                           difference_sum(polytope_hom(x), polytope_hom(y)), false));
  }

  // Changing the section rescales coefficients by units and never moves the
  // support, so the newton polytope is unchanged.
  FunctionField Fu(1);
  TwistDescriptor tu(Fu, 2);
  std::uniform_int_distribution<int> uc(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    TwistedElement p = nonzero_elem(rng, tu);
    std::map<LatticePoint, RationalFunction> units;
    for (const auto& [q, c] : p.coeffs())
      units[q] = Fu.constant(Rational(uc(rng))) * Fu.variable(0, uc(rng));
    CHECK(newton_polytope(change_section(p, units)) == newton_polytope(p));
  }
}
