#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "agr/rational_function.h"

namespace agr {

// Substitutes images[i] for variable i. Exponents in p are nonnegative, so
// only nonnegative powers of the images are formed.
inline RationalFunction substitute(const MultiPoly& p, const std::vector<RationalFunction>& images,
                                   const FunctionField& field) {
  RationalFunction acc = field.zero();
  for (const auto& [m, c] : p.terms()) {
    RationalFunction t = field.constant(c);
    for (size_t i = 0; i < images.size(); ++i)
      if (m[i] != 0) t *= images[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

inline RationalFunction substitute(const RationalFunction& x,
                                   const std::vector<RationalFunction>& images,
                                   const FunctionField& field) {
  RationalFunction den = substitute(x.den(), images, field);
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "substitution maps a denominator to zero");
  return substitute(x.num(), images, field) / den;
}

namespace detail {

// Variable image of the special form c * x^e with e a (possibly negative)
// exponent vector. Maps built from such images permute Laurent monomials, so
// they act term by term and preserve reducedness of fractions.
struct MonomialImage {
  Rational coeff;
  std::vector<long long> exps;
};

inline std::optional<std::vector<MonomialImage>> monomial_images(
    const std::vector<RationalFunction>& images) {
  std::vector<MonomialImage> out;
  for (const auto& im : images) {
    if (im.num().term_count() != 1 || im.den().term_count() != 1) return std::nullopt;
    const auto& [mn, cn] = im.num().terms().front();
    const auto& [md, cd] = im.den().terms().front();
    MonomialImage mi;
    mi.coeff = cn / cd;
    for (size_t j = 0; j < mn.size(); ++j)
      mi.exps.push_back(static_cast<long long>(mn[j]) - static_cast<long long>(md[j]));
    out.push_back(std::move(mi));
  }
  return out;
}

inline Rational rational_pow(Rational base, long long e) {
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Rational r(1);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

struct LaurentTerm {
  Rational coeff;
  std::vector<long long> exps;
};

inline std::vector<LaurentTerm> laurent_terms(const MultiPoly& p) {
  std::vector<LaurentTerm> out;
  for (const auto& [m, c] : p.terms()) {
    LaurentTerm t;
    t.coeff = c;
    t.exps.assign(m.begin(), m.end());
    out.push_back(std::move(t));
  }
  return out;
}

inline void monomial_map_pass(std::vector<LaurentTerm>& terms,
                              const std::vector<MonomialImage>& images) {
  for (auto& t : terms) {
    std::vector<long long> mapped(t.exps.size(), 0);
    for (size_t i = 0; i < t.exps.size(); ++i) {
      long long k = t.exps[i];
      if (k == 0) continue;
      t.coeff = t.coeff * rational_pow(images[i].coeff, k);
      for (size_t j = 0; j < mapped.size(); ++j) mapped[j] += k * images[i].exps[j];
    }
    t.exps = std::move(mapped);
  }
}

// Shifts the Laurent terms by the componentwise minimum exponent, returning
// a polynomial with no monomial factor; shift_out records the removed part.
inline MultiPoly lift_terms(const std::vector<LaurentTerm>& terms, int nvars,
                            std::vector<long long>& shift_out) {
  shift_out.assign(static_cast<size_t>(nvars), 0);
  for (int i = 0; i < nvars; ++i) {
    long long lo = terms.front().exps[static_cast<size_t>(i)];
    for (const auto& t : terms) lo = std::min(lo, t.exps[static_cast<size_t>(i)]);
    shift_out[static_cast<size_t>(i)] = lo;
  }
  std::vector<MultiPoly::Term> lifted;
  for (const auto& t : terms) {
    Monomial m(nvars, 0);
    for (int i = 0; i < nvars; ++i)
      m[i] = static_cast<int>(t.exps[static_cast<size_t>(i)] - shift_out[static_cast<size_t>(i)]);
    lifted.emplace_back(std::move(m), t.coeff);
  }
  return MultiPoly::from_terms(nvars, std::move(lifted));
}

}  // namespace detail

// Field automorphism of Q(x_1, ..., x_n), given by the images of the
// variables under the map and under its inverse. Both directions are
// verified to compose to the identity at construction.
class FieldAutomorphism {
 public:
  FieldAutomorphism(FunctionField field, std::vector<RationalFunction> forward,
                    std::vector<RationalFunction> backward)
      : field_(std::move(field)), fwd_(std::move(forward)), inv_(std::move(backward)) {
    size_t n = static_cast<size_t>(field_.nvars());
    if (fwd_.size() != n || inv_.size() != n)
      fail(ErrorCode::InvalidAutomorphism, "image count does not match variable count");
    for (size_t i = 0; i < n; ++i) {
      field_.check_element(fwd_[i]);
      field_.check_element(inv_[i]);
      if (fwd_[i].is_zero() || inv_[i].is_zero())
        fail(ErrorCode::InvalidAutomorphism, "automorphism sends a variable to zero");
    }
    try {
      for (size_t i = 0; i < n; ++i) {
        RationalFunction xi = field_.variable(static_cast<int>(i));
        if (substitute(fwd_[i], inv_, field_) != xi || substitute(inv_[i], fwd_, field_) != xi)
          fail(ErrorCode::InvalidAutomorphism,
               "stated inverse does not invert the map on variable " + field_.names()[i]);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DivisionByZero)
        fail(ErrorCode::InvalidAutomorphism, "images do not define a field map");
      throw;
    }
    fwd_mono_ = detail::monomial_images(fwd_);
    inv_mono_ = detail::monomial_images(inv_);
  }

  static FieldAutomorphism identity(const FunctionField& field) {
    std::vector<RationalFunction> vars;
    for (int i = 0; i < field.nvars(); ++i) vars.push_back(field.variable(i));
    return FieldAutomorphism(field, vars, vars);
  }

  const FunctionField& field() const { return field_; }
  const std::vector<RationalFunction>& forward_images() const { return fwd_; }
  const std::vector<RationalFunction>& backward_images() const { return inv_; }

  bool is_identity() const {
    for (int i = 0; i < field_.nvars(); ++i)
      if (fwd_[i] != field_.variable(i)) return false;
    return true;
  }

  RationalFunction apply(const RationalFunction& x, long long power = 1) const {
    field_.check_element(x);
    if (power == 0 || x.is_constant()) return x;
    long long steps = power > 0 ? power : -power;
    const std::optional<std::vector<detail::MonomialImage>>& mono =
        power > 0 ? fwd_mono_ : inv_mono_;
    if (mono) return apply_monomial(x, *mono, steps);
    const std::vector<RationalFunction>& images = power > 0 ? fwd_ : inv_;
    RationalFunction r = x;
    for (long long k = 0; k < steps; ++k) r = substitute(r, images, field_);
    return r;
  }

  FieldAutomorphism inverse() const { return FieldAutomorphism(field_, inv_, fwd_); }

  friend bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b) {
    return a.field_ == b.field_ && a.fwd_ == b.fwd_;
  }
  friend bool operator!=(const FieldAutomorphism& a, const FieldAutomorphism& b) {
    return !(a == b);
  }

 private:
  // Term-by-term action of a monomial map; the result of permuting the terms
  // of a reduced fraction is again reduced once monomial factors are moved to
  // the side that keeps both parts polynomial.
  RationalFunction apply_monomial(const RationalFunction& x,
                                  const std::vector<detail::MonomialImage>& images,
                                  long long steps) const {
    std::vector<detail::LaurentTerm> num_terms = detail::laurent_terms(x.num());
    std::vector<detail::LaurentTerm> den_terms = detail::laurent_terms(x.den());
    for (long long k = 0; k < steps; ++k) {
      detail::monomial_map_pass(num_terms, images);
      detail::monomial_map_pass(den_terms, images);
    }
    int n = field_.nvars();
    std::vector<long long> sn, sd;
    MultiPoly pn = detail::lift_terms(num_terms, n, sn);
    MultiPoly pd = detail::lift_terms(den_terms, n, sd);
    // Value is (pn / pd) * x^(sn - sd); fold each variable of the monomial
    // into whichever side keeps its exponents nonnegative.
    Monomial up(n, 0), down(n, 0);
    for (int i = 0; i < n; ++i) {
      long long net = sn[static_cast<size_t>(i)] - sd[static_cast<size_t>(i)];
      if (net > 0)
        up[i] = static_cast<int>(net);
      else
        down[i] = static_cast<int>(-net);
    }
    Monomial zero(n, 0);
    if (up != zero) pn = pn.shifted(up);
    if (down != zero) pd = pd.shifted(down);
    return RationalFunction::from_coprime(std::move(pn), std::move(pd));
  }

  FunctionField field_;
  std::vector<RationalFunction> fwd_, inv_;
  std::optional<std::vector<detail::MonomialImage>> fwd_mono_, inv_mono_;
};

}  // namespace agr
