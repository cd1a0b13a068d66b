#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "agr/complex.h"
#include "agr/error.h"
#include "agr/matrix.h"
#include "agr/rational.h"
#include "agr/rational_function.h"
#include "agr/skew.h"
#include "agr/twisted.h"

namespace agr {

namespace detail {
inline bool even_degree(int n) { return ((n % 2) + 2) % 2 == 0; }
}  // namespace detail

// Per-degree dimensions of the homology of a specialised complex.
struct BettiReport {
  std::map<int, int> per_degree;
  bool acyclic = true;
  long long euler_characteristic = 0;

  int betti(int n) const {
    auto it = per_degree.find(n);
    return it == per_degree.end() ? 0 : it->second;
  }
};

// betti(n) = rank(C_n) - rank(d_n) - rank(d_{n+1}); over a skew field the
// defect of the two differentials is exactly the homology dimension.
template <class F>
BettiReport betti_numbers(const ChainComplex<F>& c) {
  BettiReport rep;
  std::map<int, int> diff_rank;
  for (int n = c.min_deg(); n <= c.max_deg() + 1; ++n) diff_rank[n] = rank_of(c.diff(n));
  long long euler_by_betti = 0;
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
    int b = c.rank(n) - diff_rank[n] - diff_rank[n + 1];
    if (b < 0 || b > c.rank(n))
      fail(ErrorCode::Internal, "betti number outside [0, rank] in degree " + std::to_string(n));
    rep.per_degree[n] = b;
    if (b != 0) rep.acyclic = false;
    long long s = detail::even_degree(n) ? 1 : -1;
    rep.euler_characteristic += s * c.rank(n);
    euler_by_betti += s * b;
  }
  if (euler_by_betti != rep.euler_characteristic)
    fail(ErrorCode::Internal, "Euler characteristic disagrees with the Betti alternating sum");
  return rep;
}

// Degreewise maps gamma_n: C_n -> C_{n+1} with d gamma + gamma d = identity.
template <class F>
struct ChainContraction {
  std::map<int, Matrix<F>> gammas;
};

namespace detail {

[[noreturn]] inline void fail_not_acyclic(const BettiReport& rep) {
  for (const auto& [n, b] : rep.per_degree)
    if (b != 0)
      fail(ErrorCode::NotAcyclic,
           "complex is not acyclic: b_" + std::to_string(n) + " = " + std::to_string(b));
  fail(ErrorCode::Internal, "acyclicity flag disagrees with the Betti numbers");
}

}  // namespace detail

// Builds a contraction bottom-up: the lowest gamma is a right inverse of the
// lowest incoming differential, each later gamma solves d gamma = identity -
// gamma d against the verified image.  A nonzero seed perturbs every solution
// within the kernel of the constraint, which samples genuinely different
// contractions without breaking the identity.
template <class F>
ChainContraction<F> chain_contraction(const ChainComplex<F>& c, unsigned seed = 0) {
  BettiReport rep = betti_numbers(c);
  if (!rep.acyclic) detail::fail_not_acyclic(rep);
  const F& field = c.field();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(-2, 2);
  ChainContraction<F> out;
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
    Matrix<F> target = Matrix<F>::identity(field, c.rank(n));
    if (n > c.min_deg()) target = target - out.gammas.at(n - 1) * c.diff(n);
    Matrix<F> dnext = c.diff(n + 1);
    std::optional<Matrix<F>> gamma = solve_columns(dnext, target);
    if (!gamma)
      fail(ErrorCode::Internal, "contraction solve failed in degree " + std::to_string(n));
    if (seed != 0 && c.rank(n) > 0) {
      Matrix<F> null = nullspace(dnext);
      if (null.cols() > 0) {
        Matrix<F> k(field, null.cols(), c.rank(n));
        for (int i = 0; i < k.rows(); ++i)
          for (int j = 0; j < k.cols(); ++j) k.at(i, j) = field.constant(Rational(coin(rng)));
        *gamma = *gamma + null * k;
      }
    }
    out.gammas.emplace(n, std::move(*gamma));
  }
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
    Matrix<F> lhs = c.diff(n + 1) * out.gammas.at(n);
    if (n > c.min_deg()) lhs = lhs + out.gammas.at(n - 1) * c.diff(n);
    if (!(lhs == Matrix<F>::identity(field, c.rank(n))))
      fail(ErrorCode::Internal, "contraction identity fails in degree " + std::to_string(n));
  }
  return out;
}

enum class Indeterminacy { Exact, Sign, SignAndTranslation };

inline const char* indeterminacy_name(Indeterminacy k) {
  switch (k) {
    case Indeterminacy::Exact: return "exact";
    case Indeterminacy::Sign: return "sign";
    case Indeterminacy::SignAndTranslation: return "signAndTranslation";
  }
  fail(ErrorCode::Internal, "unknown indeterminacy");
}

// A torsion class: a nonzero field element remembered together with how much
// of it is well defined and which lattice its translation part lives in.
template <class F>
struct TorsionValue {
  typename F::Elem representative;
  Indeterminacy indeterminacy = Indeterminacy::Sign;
  LatticeGroup lattice{0};
};

inline LatticeGroup torsion_lattice(const RationalField&) { return LatticeGroup(0); }
inline LatticeGroup torsion_lattice(const FunctionField& f) { return LatticeGroup(f.nvars()); }
inline LatticeGroup torsion_lattice(const SkewField&) { return LatticeGroup(1); }

// Torsion of a based acyclic complex: det of the block matrix (c + gamma)
// mapping the odd part to the even part, degree blocks ordered ascending on
// both sides.  Well defined up to sign at this level.
template <class F>
TorsionValue<F> torsion(const ChainComplex<F>& c, unsigned seed = 0) {
  ChainContraction<F> contraction = chain_contraction(c, seed);
  const F& field = c.field();
  std::map<int, int> odd_off, even_off;
  int odd_total = 0, even_total = 0;
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
    if (detail::even_degree(n)) {
      even_off[n] = even_total;
      even_total += c.rank(n);
    } else {
      odd_off[n] = odd_total;
      odd_total += c.rank(n);
    }
  }
  if (odd_total != even_total)
    fail(ErrorCode::Internal, "odd and even ranks differ on an acyclic complex");
  Matrix<F> m(field, even_total, odd_total);
  for (const auto& [n, col0] : odd_off) {
    Matrix<F> d = c.diff(n);
    if (auto it = even_off.find(n - 1); it != even_off.end())
      for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) m.at(it->second + i, col0 + j) = d.at(i, j);
    if (auto it = even_off.find(n + 1); it != even_off.end()) {
      const Matrix<F>& g = contraction.gammas.at(n);
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) m.at(it->second + i, col0 + j) = g.at(i, j);
    }
  }
  typename F::Elem det = dieudonne_det_canonical(m);
  if (field.is_zero(det))
    fail(ErrorCode::Internal, "(c + gamma) is singular on an acyclic complex");
  return TorsionValue<F>{std::move(det), Indeterminacy::Sign, torsion_lattice(field)};
}

// Equality of torsion classes modulo sign under the detecting battery: exact
// over commutative fields, the degree interval over twisted univariate ones.
template <class F>
bool torsion_images_equal(const F& field, const TorsionValue<F>& a, const TorsionValue<F>& b) {
  return detail::dets_agree(field, a.representative, b.representative) ||
         detail::dets_agree(field, a.representative, field.neg(b.representative));
}

// Canonical representative modulo +-(unit monomial): supports shifted to
// start at 0, the graded-lex leading coefficient of the numerator positive.
template <class F>
TorsionValue<F> torsion_normal_form(const F&, const TorsionValue<F>&) {
  fail(ErrorCode::UnsupportedField, "no torsion normal form over this field");
}

inline TorsionValue<RationalField> torsion_normal_form(const RationalField&,
                                                       const TorsionValue<RationalField>& v) {
  if (v.representative.is_zero())
    fail(ErrorCode::ZeroElement, "torsion representative must be nonzero");
  Rational r = v.representative;
  if (r.sign() < 0) r = -r;
  return {r, Indeterminacy::SignAndTranslation, LatticeGroup(0)};
}

inline TorsionValue<FunctionField> torsion_normal_form(const FunctionField& field,
                                                       const TorsionValue<FunctionField>& v) {
  const RationalFunction& x = v.representative;
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "torsion representative must be nonzero");
  Monomial mn = x.num().monomial_content();
  Monomial md = x.den().monomial_content();
  for (int& e : mn) e = -e;
  for (int& e : md) e = -e;
  RationalFunction r = RationalFunction::from_coprime(x.num().shifted(mn), x.den().shifted(md));
  if (r.sign() < 0) r = -r;
  return {r, Indeterminacy::SignAndTranslation, torsion_lattice(field)};
}

inline TorsionValue<SkewField> torsion_normal_form(const SkewField& field,
                                                   const TorsionValue<SkewField>& v) {
  const SkewFraction& x = v.representative;
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "torsion representative must be nonzero");
  SkewPoly num = x.num(), den = x.den();
  // Shared right unit factors do not change the fraction: normalise the
  // denominator to mindeg 0 with trailing coefficient 1.
  long long k = den.mindeg();
  if (k != 0) {
    num = num.shift_right(-k);
    den = den.shift_right(-k);
  }
  RationalFunction c0 = den.coeff(0);
  if (!c0.is_one()) {
    RationalFunction ci = c0.inverse();
    num = num.scaled_right(ci);
    den = den.scaled_right(ci);
  }
  // The class acts on the left by +-t^m; shift the numerator to mindeg 0 and
  // fix the sign of its leading coefficient.
  num = num.shift_left(-num.mindeg());
  if (num.coeff(num.maxdeg()).sign() < 0) num = -num;
  return {SkewFraction(std::move(num), std::move(den)), Indeterminacy::SignAndTranslation,
          torsion_lattice(field)};
}

// Verifies that inclusion and projection present a degreewise coordinate
// split 0 -> sub -> mid -> quot -> 0 (the preferred basis of mid is the
// disjoint union of the embedded bases), then checks multiplicativity of
// torsion across the sequence under the detecting battery.
template <class F>
bool sequence_additivity_check(const ChainMap<F>& inclusion, const ChainMap<F>& projection) {
  const ChainComplex<F>& sub = inclusion.from();
  const ChainComplex<F>& mid = inclusion.to();
  const ChainComplex<F>& quot = projection.to();
  const F& field = mid.field();
  if (!(projection.from() == mid))
    fail(ErrorCode::BasisIncompatible, "inclusion and projection do not share the middle complex");
  int lo = std::min(std::min(sub.min_deg(), mid.min_deg()), quot.min_deg());
  int hi = std::max(std::max(sub.max_deg(), mid.max_deg()), quot.max_deg());
  for (int n = lo; n <= hi; ++n) {
    if (sub.rank(n) + quot.rank(n) != mid.rank(n))
      fail(ErrorCode::BasisIncompatible, "ranks do not add up in degree " + std::to_string(n));
    std::vector<bool> used(static_cast<size_t>(mid.rank(n)), false);
    auto coordinate = [&field](auto get, int len) {
      int hit = -1;
      for (int i = 0; i < len; ++i) {
        const auto& e = get(i);
        if (field.is_zero(e)) continue;
        if (hit >= 0 || !field.eq(e, field.one())) return -1;
        hit = i;
      }
      return hit;
    };
    Matrix<F> inc = inclusion.component(n);
    for (int j = 0; j < inc.cols(); ++j) {
      int i = coordinate([&inc, j](int r) -> const typename F::Elem& { return inc.at(r, j); },
                         inc.rows());
      if (i < 0 || used[static_cast<size_t>(i)])
        fail(ErrorCode::BasisIncompatible,
             "inclusion is not a disjoint basis embedding in degree " + std::to_string(n));
      used[static_cast<size_t>(i)] = true;
    }
    Matrix<F> proj = projection.component(n);
    for (int i = 0; i < proj.rows(); ++i) {
      int j = coordinate([&proj, i](int c) -> const typename F::Elem& { return proj.at(i, c); },
                         proj.cols());
      if (j < 0 || used[static_cast<size_t>(j)])
        fail(ErrorCode::BasisIncompatible,
             "projection does not complement the inclusion in degree " + std::to_string(n));
      used[static_cast<size_t>(j)] = true;
    }
  }
  TorsionValue<F> ts = torsion(sub);
  TorsionValue<F> tm = torsion(mid);
  TorsionValue<F> tq = torsion(quot);
  TorsionValue<F> prod{field.mul(ts.representative, tq.representative), Indeterminacy::Sign,
                       tm.lattice};
  return torsion_images_equal(field, tm, prod);
}

}  // namespace agr
