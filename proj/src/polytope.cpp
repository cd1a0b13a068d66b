#include "agr/polytope.h"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace agr {
namespace detail {

IntegralPolytope make_polytope_unchecked(LatticeGroup lattice,
                                         std::vector<LatticePoint> vertices) {
  return IntegralPolytope(lattice, std::move(vertices));
}

}  // namespace detail

namespace {

void check_dimensions(const LatticeGroup& lattice, const std::vector<LatticePoint>& points) {
  for (const LatticePoint& p : points)
    if (p.size() != static_cast<size_t>(lattice.rank))
      fail(ErrorCode::LatticeMismatch, "point dimension does not match the lattice rank");
}

// Signed area of the triangle (o, a, b); coordinates are small enough that the
// products fit comfortably in 128 bits.
__int128 cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  __int128 ax = a[0] - o[0], ay = a[1] - o[1];
  __int128 bx = b[0] - o[0], by = b[1] - o[1];
  return ax * by - ay * bx;
}

// Andrew monotone chain on a sorted, deduplicated point list.  Non-strict
// turns are popped, so collinear interior points never survive.
std::vector<LatticePoint> planar_hull(const std::vector<LatticePoint>& pts) {
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticePoint> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  std::sort(hull.begin(), hull.end());
  return hull;
}

// Solve m x = b over the rationals by Gauss-Jordan elimination.  Returns true
// and fills x only when the system is consistent and has full column rank, so
// the solution is unique.
bool solve_unique(std::vector<std::vector<Rational>> m, std::vector<Rational> b,
                  std::vector<Rational>& x) {
  size_t rows = m.size();
  size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<int> pivot_row(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    Rational inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_row[c] = static_cast<int>(r);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return false;
  for (size_t c = 0; c < cols; ++c)
    if (pivot_row[c] < 0) return false;
  x.assign(cols, Rational());
  for (size_t c = 0; c < cols; ++c) x[c] = b[static_cast<size_t>(pivot_row[c])];
  return true;
}

// Whether v lies in the convex hull of others.  By Caratheodory it suffices
// to scan affinely independent subsets of at most rank + 1 points, where the
// barycentric coordinates are unique.
bool in_convex_hull(const std::vector<LatticePoint>& others, const LatticePoint& v, int rank) {
  size_t n = others.size();
  if (n == 0) return false;
  for (int i = 0; i < rank; ++i) {
    long long lo = others[0][static_cast<size_t>(i)], hi = lo;
    for (const LatticePoint& w : others) {
      lo = std::min(lo, w[static_cast<size_t>(i)]);
      hi = std::max(hi, w[static_cast<size_t>(i)]);
    }
    long long c = v[static_cast<size_t>(i)];
    if (c < lo || c > hi) return false;
  }
  size_t eqs = static_cast<size_t>(rank) + 1;
  size_t max_k = std::min(n, eqs);
  std::vector<Rational> x;
  for (size_t k = 1; k <= max_k; ++k) {
    std::vector<size_t> comb(k);
    for (size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::vector<std::vector<Rational>> m(eqs, std::vector<Rational>(k));
      std::vector<Rational> b(eqs);
      for (size_t i = 0; i < static_cast<size_t>(rank); ++i) {
        for (size_t j = 0; j < k; ++j)
          m[i][j] = Rational(static_cast<long>(others[comb[j]][i]));
        b[i] = Rational(static_cast<long>(v[i]));
      }
      for (size_t j = 0; j < k; ++j) m[eqs - 1][j] = Rational(1);
      b[eqs - 1] = Rational(1);
      if (solve_unique(std::move(m), std::move(b), x)) {
        bool nonneg = true;
        for (const Rational& c : x)
          if (c.sign() < 0) { nonneg = false; break; }
        if (nonneg) return true;
      }
      size_t i = k;
      while (i-- > 0 && comb[i] == n - k + i) {}
      if (i == static_cast<size_t>(-1)) break;
      ++comb[i];
      for (size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return false;
}

// Extreme points in arbitrary rank: drop every point that is a convex
// combination of the rest.  A point that strictly minimises or maximises some
// coordinate is kept without the expensive test.
std::vector<LatticePoint> extreme_points(const std::vector<LatticePoint>& pts, int rank) {
  size_t n = pts.size();
  std::vector<bool> known_extreme(n, false);
  for (int i = 0; i < rank; ++i) {
    size_t lo = 0, hi = 0;
    int lo_count = 1, hi_count = 1;
    for (size_t j = 1; j < n; ++j) {
      long long c = pts[j][static_cast<size_t>(i)];
      long long clo = pts[lo][static_cast<size_t>(i)], chi = pts[hi][static_cast<size_t>(i)];
      if (c < clo) { lo = j; lo_count = 1; } else if (c == clo) ++lo_count;
      if (c > chi) { hi = j; hi_count = 1; } else if (c == chi) ++hi_count;
    }
    if (lo_count == 1) known_extreme[lo] = true;
    if (hi_count == 1) known_extreme[hi] = true;
  }
  std::vector<LatticePoint> kept;
  for (size_t i = 0; i < n; ++i) {
    if (known_extreme[i]) {
      kept.push_back(pts[i]);
      continue;
    }
    std::vector<LatticePoint> others;
    others.reserve(n - 1);
    for (size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(others, pts[i], rank)) kept.push_back(pts[i]);
  }
  return kept;
}

int find_vertex(const IntegralPolytope& p, const LatticePoint& v) {
  const auto& vs = p.vertices();
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) return -1;
  return static_cast<int>(it - vs.begin());
}

}  // namespace

IntegralPolytope convex_hull(const LatticeGroup& lattice, std::vector<LatticePoint> points) {
  if (points.empty()) fail(ErrorCode::EmptyInput, "convex hull of an empty point set");
  check_dimensions(lattice, points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1 || lattice.rank == 0)
    return detail::make_polytope_unchecked(lattice, {points.front()});
  if (lattice.rank == 1)
    return detail::make_polytope_unchecked(lattice, {points.front(), points.back()});
  if (lattice.rank == 2)
    return detail::make_polytope_unchecked(lattice, planar_hull(points));
  return detail::make_polytope_unchecked(lattice, extreme_points(points, lattice.rank));
}

IntegralPolytope point_polytope(const LatticeGroup& lattice) {
  return detail::make_polytope_unchecked(lattice, {lattice.zero()});
}

IntegralPolytope translated(const IntegralPolytope& p, const LatticePoint& by) {
  if (by.size() != static_cast<size_t>(p.lattice().rank))
    fail(ErrorCode::LatticeMismatch, "translation vector does not match the lattice rank");
  std::vector<LatticePoint> vs = p.vertices();
  for (LatticePoint& v : vs)
    for (size_t i = 0; i < v.size(); ++i) v[i] += by[i];
  // Translation preserves both extremality and lexicographic order.
  return detail::make_polytope_unchecked(p.lattice(), std::move(vs));
}

IntegralPolytope minkowski_sum(const IntegralPolytope& a, const IntegralPolytope& b) {
  if (a.lattice() != b.lattice())
    fail(ErrorCode::LatticeMismatch, "minkowski sum across different lattices");
  std::vector<LatticePoint> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const LatticePoint& u : a.vertices())
    for (const LatticePoint& v : b.vertices()) {
      LatticePoint s(u);
      for (size_t i = 0; i < s.size(); ++i) s[i] += v[i];
      sums.push_back(std::move(s));
    }
  return convex_hull(a.lattice(), std::move(sums));
}

bool translation_equal(const IntegralPolytope& a, const IntegralPolytope& b) {
  if (a.lattice() != b.lattice())
    fail(ErrorCode::LatticeMismatch, "polytope comparison across different lattices");
  if (a.vertices().size() != b.vertices().size()) return false;
  // If a = b + t then minimal vertices match up, so the only candidate is
  // their difference.
  const LatticePoint& ma = a.min_vertex();
  const LatticePoint& mb = b.min_vertex();
  LatticePoint shift(ma.size());
  for (size_t i = 0; i < shift.size(); ++i) shift[i] = ma[i] - mb[i];
  return a == translated(b, shift);
}

PolytopeDifference difference_of(IntegralPolytope plus, IntegralPolytope minus) {
  if (plus.lattice() != minus.lattice())
    fail(ErrorCode::LatticeMismatch, "polytope difference across different lattices");
  return PolytopeDifference{std::move(plus), std::move(minus)};
}

PolytopeDifference difference_sum(const PolytopeDifference& x, const PolytopeDifference& y) {
  return PolytopeDifference{minkowski_sum(x.plus, y.plus), minkowski_sum(x.minus, y.minus)};
}

bool difference_equal(const PolytopeDifference& x, const PolytopeDifference& y,
                      bool modulo_translation) {
  if (x.plus.lattice() != y.plus.lattice())
    fail(ErrorCode::LatticeMismatch, "polytope comparison across different lattices");
  IntegralPolytope left = minkowski_sum(x.plus, y.minus);
  IntegralPolytope right = minkowski_sum(y.plus, x.minus);
  if (modulo_translation) return translation_equal(left, right);
  return left == right;
}

Rational evaluate(const Character& phi, const LatticePoint& p) {
  if (phi.coefficients.size() != p.size())
    fail(ErrorCode::LatticeMismatch, "character length does not match the lattice rank");
  Rational r;
  for (size_t i = 0; i < p.size(); ++i)
    r += phi.coefficients[i] * Rational(static_cast<long>(p[i]));
  return r;
}

IntegralPolytope phi_face(const IntegralPolytope& p, const Character& phi) {
  if (phi.coefficients.size() != static_cast<size_t>(p.lattice().rank))
    fail(ErrorCode::LatticeMismatch, "character length does not match the lattice rank");
  std::vector<Rational> values;
  values.reserve(p.vertices().size());
  for (const LatticePoint& v : p.vertices()) values.push_back(evaluate(phi, v));
  Rational best = values.front();
  for (const Rational& r : values)
    if (r < best) best = r;
  std::vector<LatticePoint> face;
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] == best) face.push_back(p.vertices()[i]);
  // Vertices of p attaining the minimum are exactly the extreme points of the
  // face, and the filtered list stays sorted.
  return detail::make_polytope_unchecked(p.lattice(), std::move(face));
}

bool VertexDualCone::contains(const Character& phi) const {
  if (phi.coefficients.size() != static_cast<size_t>(lattice.rank))
    fail(ErrorCode::LatticeMismatch, "character length does not match the lattice rank");
  for (const LatticePoint& n : normals)
    if (evaluate(phi, n).sign() <= 0) return false;
  return true;
}

VertexDualCone vertex_dual_cone(const IntegralPolytope& p, const LatticePoint& v) {
  if (p.lattice().rank > 3)
    fail(ErrorCode::RankTooLargeForFaces, "dual cone queries need lattice rank at most 3");
  if (v.size() != static_cast<size_t>(p.lattice().rank))
    fail(ErrorCode::LatticeMismatch, "point dimension does not match the lattice rank");
  if (find_vertex(p, v) < 0) fail(ErrorCode::NotAVertex, "dual cone of a non-vertex point");
  VertexDualCone cone{p.lattice(), {}};
  for (const LatticePoint& w : p.vertices()) {
    if (w == v) continue;
    LatticePoint n(w.size());
    for (size_t i = 0; i < n.size(); ++i) n[i] = w[i] - v[i];
    cone.normals.push_back(std::move(n));
  }
  return cone;
}

MarkedPolytope::MarkedPolytope(IntegralPolytope polytope, std::vector<int> marked)
    : polytope_(std::move(polytope)), marked_(std::move(marked)) {
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  for (int i : marked_)
    if (i < 0 || static_cast<size_t>(i) >= polytope_.vertices().size())
      fail(ErrorCode::NotAVertex, "marked vertex index out of range");
}

bool marked_membership(const MarkedPolytope& m, const Character& phi) {
  if (phi.is_zero()) fail(ErrorCode::ZeroCharacter, "marked membership of the zero character");
  IntegralPolytope face = phi_face(m.polytope(), phi);
  if (!face.is_point()) return false;
  int index = find_vertex(m.polytope(), face.vertices().front());
  return std::binary_search(m.marked().begin(), m.marked().end(), index);
}

IntegralPolytope newton_polytope(const MultiPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroElement, "newton polytope of zero");
  std::vector<LatticePoint> points;
  points.reserve(p.terms().size());
  for (const auto& [mon, coeff] : p.terms())
    points.emplace_back(mon.begin(), mon.end());
  return convex_hull(LatticeGroup(p.nvars()), std::move(points));
}

IntegralPolytope newton_polytope(const SkewPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroElement, "newton polytope of zero");
  return convex_hull(LatticeGroup(1), {{p.mindeg()}, {p.maxdeg()}});
}

IntegralPolytope newton_polytope(const TwistedElement& p) {
  if (p.coeffs().empty()) fail(ErrorCode::ZeroElement, "newton polytope of zero");
  std::vector<LatticePoint> points;
  points.reserve(p.coeffs().size());
  for (const auto& [point, coeff] : p.coeffs()) points.push_back(point);
  return convex_hull(p.twist().group(), std::move(points));
}

PolytopeDifference polytope_hom(const RationalFunction& x) {
  if (x.num().is_zero()) fail(ErrorCode::ZeroElement, "polytope of the zero fraction");
  return PolytopeDifference{newton_polytope(x.num()), newton_polytope(x.den())};
}

PolytopeDifference polytope_hom(const SkewFraction& x) {
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "polytope of the zero fraction");
  return PolytopeDifference{newton_polytope(x.num()), newton_polytope(x.den())};
}

}  // namespace agr
