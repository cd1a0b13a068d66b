#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "agr/agrarian_map.h"
#include "agr/skew.h"
#include "agr/twisted.h"
#include "doctest.h"

using namespace agr;

namespace {

// Z^2 with plain rational coefficients and no twisting.
TwistDescriptor plain_z2() { return TwistDescriptor(FunctionField(0), 2); }

FunctionField u_field() { return FunctionField({"u"}); }

FieldAutomorphism doubling(const FunctionField& F) {
  return FieldAutomorphism(F, {F.parse("2*u")}, {F.parse("(u)/(2)")});
}

// Z acting on Q(u) by u -> 2u, trivial cocycle.
TwistDescriptor doubling_twist() {
  FunctionField F = u_field();
  return TwistDescriptor(F, {doubling(F)});
}

TwistedElement monomial(const TwistDescriptor& t, std::vector<long long> p,
                        const std::string& coeff) {
  return TwistedElement::term(t, p, t.field().parse(coeff));
}

TwistedElement rand_elem(std::mt19937& rng, const TwistDescriptor& t, int max_terms = 3) {
  std::uniform_int_distribution<int> nt(1, max_terms), coord(-2, 2), cf(-3, 3);
  TwistedElement e(t);
  int terms = nt(rng);
  for (int k = 0; k < terms; ++k) {
    LatticePoint p(static_cast<size_t>(t.rank()));
    for (auto& x : p) x = coord(rng);
    int c = cf(rng);
    if (c == 0) c = 1;
    RationalFunction coeff = t.field().constant(Rational(c));
    if (t.field().nvars() > 0 && coord(rng) > 0)
      coeff = coeff * t.field().variable(0, 1);
    e.add_term(p, coeff);
  }
  return e;
}

TwistedElement nonzero_elem(std::mt19937& rng, const TwistDescriptor& t, int max_terms = 3) {
  TwistedElement e(t);
  while (e.is_zero()) e = rand_elem(rng, t, max_terms);
  return e;
}

// Rank-1 twisted elements are exactly twisted Laurent polynomials; the skew
// polynomial ring over the same automorphism is the independent model.
SkewPoly to_skew(const TwistedElement& e, const SkewField& K) {
  SkewPoly p(K.context());
  for (const auto& [q, c] : e.coeffs())
    p += SkewPoly::monomial(K.context(), q[0], c);
  return p;
}

std::set<LatticePoint> support_set(const TwistedElement& e) {
  auto v = support_of(e);
  return std::set<LatticePoint>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("untwisted Z^2 products match Laurent multiplication") {
  TwistDescriptor t = plain_z2();
  TwistedElement x = monomial(t, {1, 0}, "1");
  TwistedElement y = monomial(t, {0, 1}, "1");
  CHECK(tw_multiply(x, y) == monomial(t, {1, 1}, "1"));
  CHECK(tw_multiply(x, y) == tw_multiply(y, x));

  TwistedElement one = TwistedElement::one(t);
  TwistedElement xm1 = x - one, xp1 = x + one;
  TwistedElement x2 = monomial(t, {2, 0}, "1");
  CHECK(tw_multiply(xm1, xp1) == x2 - one);
}

TEST_CASE("doubling twist reproduces the skew polynomial model") {
  TwistDescriptor t = doubling_twist();
  SkewField K(u_field(), doubling(u_field()));

  TwistedElement tgen = monomial(t, {1}, "1");
  TwistedElement ut = monomial(t, {1}, "u");
  TwistedElement prod = tw_multiply(tgen, ut);
  // t * (u * t) picks up the automorphism: 2u * t^2.
  CHECK(prod == monomial(t, {2}, "2*u"));
  CHECK(to_skew(prod, K) == to_skew(tgen, K) * to_skew(ut, K));

  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    TwistedElement a = rand_elem(rng, t), b = rand_elem(rng, t);
    CHECK(to_skew(tw_multiply(a, b), K) == to_skew(a, K) * to_skew(b, K));
  }
}

TEST_CASE("multiplication is associative and unital") {
  std::mt19937 rng(47);
  FunctionField F = u_field();
  std::vector<std::vector<RationalFunction>> table{{F.parse("u") * F.parse("u")}};
  std::vector<TwistDescriptor> descs{
      plain_z2(), doubling_twist(),
      TwistDescriptor(F, {FieldAutomorphism::identity(F)}, table)};
  for (const TwistDescriptor& t : descs) {
    TwistedElement one = TwistedElement::one(t);
    for (int it = 0; it < 12; ++it) {
      TwistedElement a = rand_elem(rng, t), b = rand_elem(rng, t), c = rand_elem(rng, t);
      CHECK(tw_multiply(tw_multiply(a, b), c) == tw_multiply(a, tw_multiply(b, c)));
      CHECK(tw_multiply(one, a) == a);
      CHECK(tw_multiply(a, one) == a);
    }
  }
}

TEST_CASE("crossed products of a lattice have no zero divisors") {
  std::mt19937 rng(53);
  for (const TwistDescriptor& t : {plain_z2(), doubling_twist()}) {
    for (int it = 0; it < 25; ++it) {
      TwistedElement a = nonzero_elem(rng, t), b = nonzero_elem(rng, t);
      CHECK(!tw_multiply(a, b).is_zero());
    }
  }
}

TEST_CASE("product supports lie in the sumset of the factor supports") {
  std::mt19937 rng(59);
  for (const TwistDescriptor& t : {plain_z2(), doubling_twist()}) {
    for (int it = 0; it < 20; ++it) {
      TwistedElement a = nonzero_elem(rng, t), b = nonzero_elem(rng, t);
      std::set<LatticePoint> sumset;
      for (const auto& p : support_of(a))
        for (const auto& q : support_of(b)) sumset.insert(lattice_add(p, q));
      for (const auto& r : support_of(tw_multiply(a, b))) CHECK(sumset.count(r) == 1);
    }
  }
}

TEST_CASE("mixing different twists is rejected") {
  TwistedElement a = TwistedElement::one(plain_z2());
  TwistDescriptor other(FunctionField(0), 2,
                        {{FunctionField(0).one(), -FunctionField(0).one()},
                         {FunctionField(0).one(), FunctionField(0).one()}});
  TwistedElement b = TwistedElement::one(other);
  try {
    tw_multiply(a, b);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TwistMismatch);
  }
}

TEST_CASE("sign cocycle on Z^2 satisfies the structure identities") {
  FunctionField F(0);
  RationalFunction one = F.one(), minus = -F.one();
  // tau(g, g') = (-1)^{g_1 g'_2}.
  TwistDescriptor t(F, 2, {{one, minus}, {one, one}});
  StructureCheck res = check_structure_functions(t, 50);
  CHECK(res.ok);
  CHECK(res.report.empty());

  // The twist is genuinely noncommutative: x y = -(y x).
  TwistedElement x = TwistedElement::term(t, {1, 0}, one);
  TwistedElement y = TwistedElement::term(t, {0, 1}, one);
  CHECK(tw_multiply(x, y) == tw_multiply(y, x).scaled(minus));
}

TEST_CASE("non-multiplicative unit tables are caught with a witness") {
  FunctionField F = u_field();
  // tau(g, g') = u^{g g'} is bilinear, but u is moved by the automorphism,
  // so the cocycle identity fails.
  TwistDescriptor t(F, {doubling(F)}, {{F.parse("u")}});
  StructureCheck res = check_structure_functions(t, 10);
  CHECK(!res.ok);
  CHECK(res.report.find("tau") != std::string::npos);
  CHECK(res.report.find("g''") != std::string::npos);
}

TEST_CASE("section change is a ring isomorphism onto the retwisted product") {
  // Two sections of Z^2 -> Z: q -> (q, 0) and q -> (q, q^2).  The first
  // gives the untwisted product, the second the cocycle u^{-2 q q'}, and the
  // coefficient units u^{-q^2} intertwine the two multiplications.
  FunctionField F = u_field();
  TwistDescriptor straight(F, 1);
  TwistDescriptor curved(F, {FieldAutomorphism::identity(F)},
                         {{F.parse("(1)/(u^2)")}});

  auto phi = [&](const TwistedElement& e) {
    std::map<LatticePoint, RationalFunction> units;
    for (const auto& q : support_of(e))
      units[q] = F.monomial(Rational(1), {-q[0] * q[0]});
    return change_section(e, units, curved);
  };

  std::mt19937 rng(61);
  for (int it = 0; it < 15; ++it) {
    TwistedElement a = nonzero_elem(rng, straight), b = nonzero_elem(rng, straight);
    TwistedElement lhs = phi(tw_multiply(a, b));
    TwistedElement rhs = tw_multiply(phi(a), phi(b));
    CHECK(lhs == rhs);
    CHECK(support_set(phi(a)) == support_set(a));
  }
}

TEST_CASE("section change requires a unit on every support point") {
  TwistDescriptor t = doubling_twist();
  TwistedElement e = monomial(t, {2}, "u");
  std::map<LatticePoint, RationalFunction> units;
  CHECK_THROWS_AS(change_section(e, units), Error);
  units[{2}] = t.field().zero();
  CHECK_THROWS_AS(change_section(e, units), Error);
  units[{2}] = t.field().parse("u");
  TwistedElement moved = change_section(e, units);
  CHECK(moved.coeff({2}) == t.field().parse("u^2"));
}

TEST_CASE("twisted element text form round-trips") {
  std::mt19937 rng(67);
  for (const TwistDescriptor& t : {plain_z2(), doubling_twist()}) {
    CHECK(TwistedElement::parse(t, "0") == TwistedElement::zero(t));
    for (int it = 0; it < 15; ++it) {
      TwistedElement e = rand_elem(rng, t);
      CHECK(TwistedElement::parse(t, e.str()) == e);
    }
  }
  TwistDescriptor t = doubling_twist();
  CHECK(TwistedElement::parse(t, "u * t1^2 + (1/2) * t1^-1") ==
        monomial(t, {2}, "u") + monomial(t, {-1}, "1/2"));
  CHECK_THROWS_AS(TwistedElement::parse(t, "u * t3^1"), ParseError);
  CHECK_THROWS_AS(TwistedElement::parse(t, "u * t1^"), ParseError);
}

TEST_CASE("lattice points and descriptors validate their shapes") {
  TwistDescriptor t = plain_z2();
  CHECK_THROWS_AS(TwistedElement::term(t, {1}, t.field().one()), Error);
  CHECK_THROWS_AS(LatticeGroup(-1), Error);
  FunctionField F(0);
  CHECK_THROWS_AS(TwistDescriptor(F, 2, {{F.one()}}), Error);
  CHECK_THROWS_AS(TwistDescriptor(F, 1, {{F.zero()}}), Error);
}

TEST_CASE("words push forward multiplicatively") {
  FunctionField F(2);
  AgrarianMap<FunctionField> alpha(F, MapKind::Abelianisation,
                                   {F.variable(0), F.variable(1)});
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> letter(1, 2), sign(0, 1), len(0, 6);
  auto rand_word = [&] {
    std::vector<int> ls;
    int L = len(rng);
    for (int k = 0; k < L; ++k) ls.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    return FreeWord(ls);
  };
  for (int it = 0; it < 25; ++it) {
    FreeWord v = rand_word(), w = rand_word();
    CHECK(alpha.push_forward_word(v * w) ==
          alpha.push_forward_word(v) * alpha.push_forward_word(w));
    CHECK(alpha.push_forward_word(v.inverse()) ==
          alpha.push_forward_word(v).inverse());
  }
}

TEST_CASE("group ring sums push forward additively") {
  // x -> t, y -> 1 on the Baumslag-Solitar generators: the Fox-style sum
  // 1 - x y x^{-1} collapses to 1 - t t^{-1} = 0.
  FunctionField F(1);
  AgrarianMap<FunctionField> alpha(F, MapKind::Abelianisation, {F.variable(0), F.one()});
  FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1);
  GroupRingSum s;
  s.add(FreeWord(), 1);
  s.add(x * y * x.inverse(), -1);
  CHECK(alpha.push_forward(s).is_zero());

  GroupRingSum two;
  two.add(y, 2);
  CHECK(alpha.push_forward(two) == F.constant(Rational(2)));
}

TEST_CASE("relator checks accept consistent images and reject broken ones") {
  Presentation bs({"x", "y"}, {FreeWord({1, 2, -1, -2, -2})});
  FunctionField F(1);
  AgrarianMap<FunctionField> good(F, MapKind::Abelianisation, {F.variable(0), F.one()});
  CHECK_NOTHROW(good.check_relators(bs));

  AgrarianMap<FunctionField> bad(F, MapKind::Abelianisation, {F.variable(0), F.variable(0)});
  try {
    bad.check_relators(bs);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelatorNotKilled);
  }

  // Klein bottle group with its genuinely twisted univariate map.
  Presentation klein({"x", "y"}, {FreeWord({1, 2, -1, 2})});
  FunctionField U({"u"});
  RationalFunction uinv = U.parse("(1)/(u)");
  SkewField K(U, FieldAutomorphism(U, {uinv}, {uinv}));
  AgrarianMap<SkewField> tw(K, MapKind::TwistedUnivariate,
                            {K.variable(), K.coeff_elem(U.parse("u"))});
  CHECK_NOTHROW(tw.check_relators(klein));

  AgrarianMap<SkewField> twbad(K, MapKind::TwistedUnivariate,
                               {K.variable(), K.variable()});
  CHECK_THROWS_AS(twbad.check_relators(klein), Error);
}

TEST_CASE("maps reject zero images and unknown generators") {
  FunctionField F(1);
  CHECK_THROWS_AS(AgrarianMap<FunctionField>(F, MapKind::Augmentation, {F.zero()}), Error);
  AgrarianMap<FunctionField> alpha(F, MapKind::Augmentation, {F.one()});
  CHECK_THROWS_AS(alpha.push_forward_word(FreeWord({2})), Error);
}
