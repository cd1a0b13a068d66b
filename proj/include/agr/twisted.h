#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "agr/automorphism.h"
#include "agr/error.h"
#include "agr/rational_function.h"

namespace agr {

using LatticePoint = std::vector<long long>;

inline LatticePoint lattice_add(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) fail(ErrorCode::LatticeMismatch, "points from different lattices");
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline LatticePoint lattice_neg(const LatticePoint& a) {
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

// Free abelian group Z^n with its standard basis.
struct LatticeGroup {
  int rank = 0;

  LatticeGroup() = default;
  explicit LatticeGroup(int r) : rank(r) {
    if (r < 0) fail(ErrorCode::LatticeMismatch, "lattice rank must be nonnegative");
  }

  LatticePoint zero() const { return LatticePoint(static_cast<size_t>(rank), 0); }
  LatticePoint basis(int i) const {
    LatticePoint p = zero();
    p[static_cast<size_t>(i)] = 1;
    return p;
  }

  friend bool operator==(const LatticeGroup& a, const LatticeGroup& b) { return a.rank == b.rank; }
  friend bool operator!=(const LatticeGroup& a, const LatticeGroup& b) { return !(a == b); }
};

// Crossed-product data for D * Z^n: one coefficient automorphism per basis
// vector and a table of cocycle units on basis pairs, both extended to the
// whole lattice multiplicatively: c(g) = prod sigma_i^{g_i} and
// tau(g, h) = prod B[i][j]^{g_i h_j}.
class TwistDescriptor {
 public:
  TwistDescriptor(const FunctionField& field, int rank)
      : TwistDescriptor(field, trivial_autos(field, rank)) {}

  TwistDescriptor(const FunctionField& field, const std::vector<FieldAutomorphism>& autos)
      : TwistDescriptor(field, autos, unit_table(field, static_cast<int>(autos.size()))) {}

  TwistDescriptor(const FunctionField& field, int rank,
                  std::vector<std::vector<RationalFunction>> cocycle)
      : TwistDescriptor(field, trivial_autos(field, rank), std::move(cocycle)) {}

  TwistDescriptor(FunctionField field, std::vector<FieldAutomorphism> autos,
                  std::vector<std::vector<RationalFunction>> cocycle)
      : field_(std::move(field)),
        group_(static_cast<int>(autos.size())),
        autos_(std::move(autos)),
        cocycle_(std::move(cocycle)) {
    for (const auto& a : autos_)
      if (a.field() != field_)
        fail(ErrorCode::FieldMismatch, "automorphism acts on a different coefficient field");
    size_t n = static_cast<size_t>(rank());
    if (cocycle_.size() != n) fail(ErrorCode::LatticeMismatch, "cocycle table has wrong shape");
    for (const auto& row : cocycle_) {
      if (row.size() != n) fail(ErrorCode::LatticeMismatch, "cocycle table has wrong shape");
      for (const auto& c : row) {
        field_.check_element(c);
        if (c.is_zero()) fail(ErrorCode::ZeroElement, "cocycle entries must be units");
      }
    }
  }

  const FunctionField& field() const { return field_; }
  const LatticeGroup& group() const { return group_; }
  int rank() const { return group_.rank; }
  const std::vector<FieldAutomorphism>& automorphisms() const { return autos_; }
  const std::vector<std::vector<RationalFunction>>& cocycle_table() const { return cocycle_; }

  // c(g) applied to x, basis factors composed in index order.
  RationalFunction act(const LatticePoint& g, const RationalFunction& x) const {
    check_point(g);
    RationalFunction r = x;
    for (size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) r = autos_[i].apply(r, g[i]);
    return r;
  }

  // tau(g, h), the bilinear extension of the basis table.
  RationalFunction cocycle(const LatticePoint& g, const LatticePoint& h) const {
    check_point(g);
    check_point(h);
    RationalFunction r = field_.one();
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      for (size_t j = 0; j < h.size(); ++j) {
        long long e = g[i] * h[j];
        if (e != 0) r = r * cocycle_[i][j].pow(e);
      }
    }
    return r;
  }

  void check_point(const LatticePoint& p) const {
    if (p.size() != static_cast<size_t>(rank()))
      fail(ErrorCode::LatticeMismatch, "point dimension does not match the lattice rank");
  }

  friend bool operator==(const TwistDescriptor& a, const TwistDescriptor& b) {
    return a.field_ == b.field_ && a.group_ == b.group_ && a.autos_ == b.autos_ &&
           a.cocycle_ == b.cocycle_;
  }
  friend bool operator!=(const TwistDescriptor& a, const TwistDescriptor& b) { return !(a == b); }

 private:
  static std::vector<FieldAutomorphism> trivial_autos(const FunctionField& field, int rank) {
    if (rank < 0) fail(ErrorCode::LatticeMismatch, "lattice rank must be nonnegative");
    std::vector<FieldAutomorphism> autos;
    autos.reserve(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) autos.push_back(FieldAutomorphism::identity(field));
    return autos;
  }
  static std::vector<std::vector<RationalFunction>> unit_table(const FunctionField& field, int n) {
    return std::vector<std::vector<RationalFunction>>(
        static_cast<size_t>(n),
        std::vector<RationalFunction>(static_cast<size_t>(n), field.one()));
  }

  FunctionField field_;
  LatticeGroup group_;
  std::vector<FieldAutomorphism> autos_;
  std::vector<std::vector<RationalFunction>> cocycle_;
};

// Element of the crossed product: finitely many lattice points with nonzero
// coefficients.  The map never stores a zero coefficient.
class TwistedElement {
 public:
  explicit TwistedElement(TwistDescriptor twist) : twist_(std::move(twist)) {}

  static TwistedElement zero(const TwistDescriptor& t) { return TwistedElement(t); }
  static TwistedElement one(const TwistDescriptor& t) {
    return term(t, t.group().zero(), t.field().one());
  }
  static TwistedElement term(const TwistDescriptor& t, const LatticePoint& p,
                             const RationalFunction& c) {
    TwistedElement e(t);
    e.add_term(p, c);
    return e;
  }
  static TwistedElement from_terms(const TwistDescriptor& t,
                                   const std::vector<std::pair<LatticePoint, RationalFunction>>& terms) {
    TwistedElement e(t);
    for (const auto& [p, c] : terms) e.add_term(p, c);
    return e;
  }

  const TwistDescriptor& twist() const { return twist_; }
  const std::map<LatticePoint, RationalFunction>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  size_t term_count() const { return coeffs_.size(); }

  RationalFunction coeff(const LatticePoint& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? twist_.field().zero() : it->second;
  }

  void add_term(const LatticePoint& p, const RationalFunction& c) {
    twist_.check_point(p);
    twist_.field().check_element(c);
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  // Retags the element into a descriptor over the same coefficient field and
  // lattice; used when a section change lands in a differently twisted ring.
  TwistedElement with_twist(const TwistDescriptor& t) const {
    if (t.field() != twist_.field() || t.group() != twist_.group())
      fail(ErrorCode::TwistMismatch, "target twist lives over a different ring");
    TwistedElement e(t);
    e.coeffs_ = coeffs_;
    return e;
  }

  friend TwistedElement operator+(const TwistedElement& a, const TwistedElement& b) {
    check_same(a, b);
    TwistedElement r = a;
    for (const auto& [p, c] : b.coeffs_) r.add_term(p, c);
    return r;
  }
  friend TwistedElement operator-(const TwistedElement& a, const TwistedElement& b) {
    check_same(a, b);
    TwistedElement r = a;
    for (const auto& [p, c] : b.coeffs_) r.add_term(p, -c);
    return r;
  }

  TwistedElement scaled(const RationalFunction& c) const {
    TwistedElement r(twist_);
    if (c.is_zero()) return r;
    for (const auto& [p, v] : coeffs_) r.coeffs_.emplace(p, c * v);
    return r;
  }

  friend bool operator==(const TwistedElement& a, const TwistedElement& b) {
    return a.twist_ == b.twist_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TwistedElement& a, const TwistedElement& b) { return !(a == b); }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << twist_.field().str(c) << ")";
      for (size_t i = 0; i < p.size(); ++i) out << " * t" << (i + 1) << "^" << p[i];
    }
    return out.str();
  }

  static TwistedElement parse(const TwistDescriptor& t, const std::string& text);

 private:
  static void check_same(const TwistedElement& a, const TwistedElement& b) {
    if (a.twist_ != b.twist_) fail(ErrorCode::TwistMismatch, "elements carry different twists");
  }

  TwistDescriptor twist_;
  std::map<LatticePoint, RationalFunction> coeffs_;
};

// g * (r ∗ 1) = c(g)(r) ∗ g and g * g' = tau(g, g') ∗ (g + g'), extended
// bilinearly: (r ∗ g)(s ∗ g') = r c(g)(s) tau(g, g') ∗ (g + g').
inline TwistedElement tw_multiply(const TwistedElement& a, const TwistedElement& b) {
  if (a.twist() != b.twist()) fail(ErrorCode::TwistMismatch, "elements carry different twists");
  const TwistDescriptor& t = a.twist();
  TwistedElement r(t);
  for (const auto& [g, cg] : a.coeffs()) {
    for (const auto& [h, ch] : b.coeffs()) {
      RationalFunction c = cg * t.act(g, ch) * t.cocycle(g, h);
      r.add_term(lattice_add(g, h), c);
    }
  }
  return r;
}

inline TwistedElement operator*(const TwistedElement& a, const TwistedElement& b) {
  return tw_multiply(a, b);
}

inline std::vector<LatticePoint> support_of(const TwistedElement& p) {
  std::vector<LatticePoint> pts;
  pts.reserve(p.term_count());
  for (const auto& [q, c] : p.coeffs()) pts.push_back(q);
  return pts;
}

// Coefficientwise rescale u_q -> u_q * units(q); with units coming from a
// quotient of two sections this is the ring isomorphism between the two
// crossed products.
inline TwistedElement change_section(const TwistedElement& p,
                                     const std::map<LatticePoint, RationalFunction>& units) {
  TwistedElement r(p.twist());
  for (const auto& [q, c] : p.coeffs()) {
    auto it = units.find(q);
    if (it == units.end() || it->second.is_zero())
      fail(ErrorCode::MissingUnit, "no unit supplied for a support point");
    r.add_term(q, c * it->second);
  }
  return r;
}

inline TwistedElement change_section(const TwistedElement& p,
                                     const std::map<LatticePoint, RationalFunction>& units,
                                     const TwistDescriptor& target) {
  return change_section(p, units).with_twist(target);
}

struct StructureCheck {
  bool ok = true;
  std::string report;
  explicit operator bool() const { return ok; }
};

namespace detail {

inline std::string point_str(const LatticePoint& p) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p[i];
  out << ")";
  return out.str();
}

inline std::vector<LatticePoint> lattice_ball(int rank, long long radius) {
  std::vector<LatticePoint> pts;
  LatticePoint p(static_cast<size_t>(rank), -radius);
  if (rank == 0) return {p};
  for (;;) {
    pts.push_back(p);
    int i = 0;
    while (i < rank && p[static_cast<size_t>(i)] == radius) {
      p[static_cast<size_t>(i)] = -radius;
      ++i;
    }
    if (i == rank) break;
    ++p[static_cast<size_t>(i)];
  }
  return pts;
}

}  // namespace detail

// Verifies the two crossed-product identities
//   c(g) c(g') = c(g + g')        (conjugation by units is trivial here,
//                                  the coefficient field being commutative)
//   tau(g, g') tau(g+g', g'') = c(g)(tau(g', g'')) tau(g, g'+g'')
// on every triple from the radius-2 ball and on `samples` random triples.
inline StructureCheck check_structure_functions(const TwistDescriptor& t, int samples,
                                                unsigned seed = 12345) {
  const FunctionField& field = t.field();
  int rank = t.rank();

  auto composition_fails = [&](const LatticePoint& g, const LatticePoint& h,
                               std::string* what) {
    for (int v = 0; v < field.nvars(); ++v) {
      RationalFunction x = field.variable(v);
      RationalFunction lhs = t.act(g, t.act(h, x));
      RationalFunction rhs = t.act(lattice_add(g, h), x);
      if (lhs != rhs) {
        *what = "c(g) c(g') = c(g g') fails on " + field.names()[static_cast<size_t>(v)] +
                " at g = " + detail::point_str(g) + ", g' = " + detail::point_str(h) + ": " +
                field.str(lhs) + " vs " + field.str(rhs);
        return true;
      }
    }
    return false;
  };

  auto cocycle_fails = [&](const LatticePoint& g, const LatticePoint& h, const LatticePoint& k,
                           std::string* what) {
    RationalFunction lhs = t.cocycle(g, h) * t.cocycle(lattice_add(g, h), k);
    RationalFunction rhs = t.act(g, t.cocycle(h, k)) * t.cocycle(g, lattice_add(h, k));
    if (lhs != rhs) {
      *what = "tau(g,g') tau(gg',g'') = c(g)(tau(g',g'')) tau(g,g'g'') fails at g = " +
              detail::point_str(g) + ", g' = " + detail::point_str(h) + ", g'' = " +
              detail::point_str(k) + ": " + field.str(lhs) + " vs " + field.str(rhs);
      return true;
    }
    return false;
  };

  auto check_triple = [&](const LatticePoint& g, const LatticePoint& h, const LatticePoint& k,
                          std::string* what) {
    return composition_fails(g, h, what) || cocycle_fails(g, h, k, what);
  };

  std::string what;
  std::vector<LatticePoint> ball = detail::lattice_ball(rank, 2);
  for (const LatticePoint& g : ball)
    for (const LatticePoint& h : ball)
      for (const LatticePoint& k : ball)
        if (check_triple(g, h, k, &what)) return {false, what};

  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> coord(-4, 4);
  auto random_point = [&]() {
    LatticePoint p(static_cast<size_t>(rank));
    for (auto& x : p) x = coord(rng);
    return p;
  };
  for (int s = 0; s < samples; ++s)
    if (check_triple(random_point(), random_point(), random_point(), &what)) return {false, what};

  return {};
}

inline TwistedElement TwistedElement::parse(const TwistDescriptor& t, const std::string& text) {
  TwistedElement out(t);
  size_t i = 0, n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_error = [&](const std::string& what) -> ParseError {
    return ParseError(what, 1, static_cast<int>(i) + 1);
  };

  skip_ws();
  if (i == n) throw parse_error("empty twisted element");
  if (text.compare(i, 1, "0") == 0 && [&] {
        size_t j = i + 1;
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        return j == n;
      }())
    return out;

  while (i < n) {
    skip_ws();
    // Coefficient: a parenthesized field expression, or a bare token that
    // runs to the first '*'.
    std::string coeff_text;
    if (i < n && text[i] == '(') {
      int depth = 0;
      size_t start = ++i;
      for (; i < n; ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') {
          if (depth == 0) break;
          --depth;
        }
      }
      if (i == n) throw parse_error("unbalanced parenthesis");
      coeff_text = text.substr(start, i - start);
      ++i;
    } else {
      size_t start = i;
      while (i < n && text[i] != '*' && text[i] != '+') ++i;
      coeff_text = text.substr(start, i - start);
    }
    RationalFunction c = t.field().parse(coeff_text);

    LatticePoint p = t.group().zero();
    for (;;) {
      skip_ws();
      if (i < n && text[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i >= n || text[i] == '+') break;
      if (text[i] != 't') throw parse_error("expected a lattice coordinate");
      size_t start = i++;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string name = text.substr(start, i - start);
      if (name.size() < 2) throw parse_error("lattice coordinates are t1, t2, ...");
      int idx = std::stoi(name.substr(1)) - 1;
      if (idx < 0 || idx >= t.rank()) throw parse_error("lattice coordinate out of range");
      if (i >= n || text[i] != '^') throw parse_error("expected '^' after coordinate");
      ++i;
      size_t estart = i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == estart || (i == estart + 1 && !std::isdigit(static_cast<unsigned char>(text[estart]))))
        throw parse_error("expected an integer exponent");
      p[static_cast<size_t>(idx)] += std::stoll(text.substr(estart, i - estart));
    }
    out.add_term(p, c);
    if (i < n) {
      if (text[i] != '+') throw parse_error("expected '+' between terms");
      ++i;
      skip_ws();
      if (i == n) throw parse_error("trailing '+'");
    }
  }
  return out;
}

}  // namespace agr
