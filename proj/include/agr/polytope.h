#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "agr/error.h"
#include "agr/polynomial.h"
#include "agr/rational.h"
#include "agr/rational_function.h"
#include "agr/skew.h"
#include "agr/twisted.h"

namespace agr {

class IntegralPolytope;

namespace detail {
// Trusted constructor: callers guarantee the list is exactly the sorted set of
// extreme points of its own hull.
IntegralPolytope make_polytope_unchecked(LatticeGroup lattice,
                                         std::vector<LatticePoint> vertices);
}  // namespace detail

// Integral polytope inside a fixed lattice, stored by its extreme points in
// ascending lexicographic order.  The stored set is canonical: two polytopes
// are equal as sets of lattice points iff their vertex vectors compare equal.
class IntegralPolytope {
 public:
  const LatticeGroup& lattice() const { return lattice_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  bool is_point() const { return vertices_.size() == 1; }

  // Lexicographically smallest vertex, the reference corner for translation
  // normalisation.
  const LatticePoint& min_vertex() const { return vertices_.front(); }

  friend bool operator==(const IntegralPolytope& a, const IntegralPolytope& b) {
    return a.lattice_ == b.lattice_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const IntegralPolytope& a, const IntegralPolytope& b) {
    return !(a == b);
  }

  friend IntegralPolytope detail::make_polytope_unchecked(
      LatticeGroup lattice, std::vector<LatticePoint> vertices);

 private:
  IntegralPolytope(LatticeGroup lattice, std::vector<LatticePoint> vertices)
      : lattice_(lattice), vertices_(std::move(vertices)) {}

  LatticeGroup lattice_;
  std::vector<LatticePoint> vertices_;
};

// Extreme points of the convex hull of a nonempty point set.  Works in every
// rank; only the face-level queries below are restricted to rank <= 3.
IntegralPolytope convex_hull(const LatticeGroup& lattice,
                             std::vector<LatticePoint> points);

// The one-point polytope {0}.
IntegralPolytope point_polytope(const LatticeGroup& lattice);

IntegralPolytope translated(const IntegralPolytope& p, const LatticePoint& by);

IntegralPolytope minkowski_sum(const IntegralPolytope& a, const IntegralPolytope& b);

// Equality after translating both polytopes so their minimal vertices sit at
// the origin.
bool translation_equal(const IntegralPolytope& a, const IntegralPolytope& b);

// Formal difference plus - minus of integral polytopes.  No canonical form is
// computed; equality is the semantic relation difference_equal below.
struct PolytopeDifference {
  IntegralPolytope plus;
  IntegralPolytope minus;
};

PolytopeDifference difference_of(IntegralPolytope plus, IntegralPolytope minus);

// Sum in the difference group: componentwise Minkowski sum.
PolytopeDifference difference_sum(const PolytopeDifference& x, const PolytopeDifference& y);

// Grothendieck relation: x = y iff x.plus + y.minus = y.plus + x.minus as
// polytopes, optionally after an optimal translation.
bool difference_equal(const PolytopeDifference& x, const PolytopeDifference& y,
                      bool modulo_translation = false);

// Rational character of the lattice, phi(p) = sum phi_i p_i.
struct Character {
  std::vector<Rational> coefficients;

  bool is_zero() const {
    for (const Rational& c : coefficients)
      if (!c.is_zero()) return false;
    return true;
  }
};

Rational evaluate(const Character& phi, const LatticePoint& p);

// Face of p spanned by the vertices where phi attains its minimum.
IntegralPolytope phi_face(const IntegralPolytope& p, const Character& phi);

// Open normal cone of a vertex: the characters phi with phi(v) < phi(w) for
// every other vertex w.  Stored as the strict inequalities phi(w - v) > 0.
struct VertexDualCone {
  LatticeGroup lattice;
  std::vector<LatticePoint> normals;

  // Whether phi satisfies every strict inequality.  For a point polytope the
  // list is empty and every character, zero included, passes.
  bool contains(const Character& phi) const;
};

// Dual cone of a vertex of p.  Face-level query, so the lattice rank must be
// at most 3.
VertexDualCone vertex_dual_cone(const IntegralPolytope& p, const LatticePoint& v);

// Polytope with a distinguished subset of its vertices, stored as sorted
// indices into the vertex list.
class MarkedPolytope {
 public:
  MarkedPolytope(IntegralPolytope polytope, std::vector<int> marked);

  const IntegralPolytope& polytope() const { return polytope_; }
  const std::vector<int>& marked() const { return marked_; }

  friend bool operator==(const MarkedPolytope& a, const MarkedPolytope& b) {
    return a.polytope_ == b.polytope_ && a.marked_ == b.marked_;
  }
  friend bool operator!=(const MarkedPolytope& a, const MarkedPolytope& b) {
    return !(a == b);
  }

 private:
  IntegralPolytope polytope_;
  std::vector<int> marked_;
};

// Whether the phi-minimal face is a single vertex and that vertex is marked.
bool marked_membership(const MarkedPolytope& m, const Character& phi);

// Newton polytopes: convex hulls of supports.
IntegralPolytope newton_polytope(const MultiPoly& p);
IntegralPolytope newton_polytope(const SkewPoly& p);
IntegralPolytope newton_polytope(const TwistedElement& p);

// Polytope homomorphism on nonzero fractions, the pair (P(num), P(den)) seen
// in the difference group.
PolytopeDifference polytope_hom(const RationalFunction& x);
PolytopeDifference polytope_hom(const SkewFraction& x);

}  // namespace agr
