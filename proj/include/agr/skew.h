#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "agr/automorphism.h"

namespace agr {

// Shared data of a twisted Laurent polynomial ring K(u)[t^{+-1}; sigma]:
// the coefficient field, the twisting automorphism, and the variable name.
struct SkewContext {
  FunctionField coeff_field;
  FieldAutomorphism sigma;
  std::string var_name = "t";

  bool sigma_identity;

  SkewContext(FunctionField field, FieldAutomorphism aut, std::string name = "t")
      : coeff_field(std::move(field)), sigma(std::move(aut)), var_name(std::move(name)),
        sigma_identity(sigma.is_identity()) {
    if (sigma.field() != coeff_field)
      fail(ErrorCode::FieldMismatch, "automorphism acts on a different coefficient field");
  }

  friend bool operator==(const SkewContext& a, const SkewContext& b) {
    return a.coeff_field == b.coeff_field && a.sigma == b.sigma && a.var_name == b.var_name;
  }
};

using SkewContextPtr = std::shared_ptr<const SkewContext>;

inline SkewContextPtr make_skew_context(FunctionField field, FieldAutomorphism sigma,
                                        std::string var_name = "t") {
  return std::make_shared<const SkewContext>(std::move(field), std::move(sigma),
                                             std::move(var_name));
}

// Laurent polynomial sum c_i t^i with t * c = sigma(c) * t. Exponent map
// holds only nonzero coefficients, so representation is canonical.
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(SkewContextPtr ctx) : ctx_(std::move(ctx)) {}

  static SkewPoly monomial(SkewContextPtr ctx, long long exp, RationalFunction coeff) {
    SkewPoly p(std::move(ctx));
    if (!coeff.is_zero()) p.coeffs_.emplace(exp, std::move(coeff));
    return p;
  }
  static SkewPoly constant(SkewContextPtr ctx, RationalFunction coeff) {
    return monomial(std::move(ctx), 0, std::move(coeff));
  }

  const SkewContextPtr& context() const { return ctx_; }
  const std::map<long long, RationalFunction>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one();
  }
  // A unit of the twisted Laurent ring is exactly a nonzero monomial.
  bool is_unit() const { return coeffs_.size() == 1; }

  long long mindeg() const {
    if (is_zero()) fail(ErrorCode::ZeroElement, "degree of the zero polynomial");
    return coeffs_.begin()->first;
  }
  long long maxdeg() const {
    if (is_zero()) fail(ErrorCode::ZeroElement, "degree of the zero polynomial");
    return coeffs_.rbegin()->first;
  }
  RationalFunction coeff(long long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? ctx_->coeff_field.zero() : it->second;
  }

  SkewPoly operator-() const {
    SkewPoly r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
  }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    a.check_context(b);
    SkewPoly r = a;
    for (auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
  }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    a.check_context(b);
    SkewPoly r = a;
    for (auto& [e, c] : b.coeffs_) r.add_term(e, -c);
    return r;
  }

  // (a_i t^i)(b_j t^j) = a_i sigma^i(b_j) t^{i+j}.
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    a.check_context(b);
    SkewPoly r(a.ctx_);
    const FieldAutomorphism& sigma = a.ctx_->sigma;
    for (auto& [i, ai] : a.coeffs_) {
      for (auto& [j, bj] : b.coeffs_) {
        RationalFunction twisted = a.ctx_->sigma_identity ? bj : sigma.apply(bj, i);
        r.add_term(i + j, ai * twisted);
      }
    }
    return r;
  }

  SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
  SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
  SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

  // t^k * p: exponents shift by k, coefficients twist by sigma^k.
  SkewPoly shift_left(long long k) const {
    SkewPoly r(ctx_);
    for (auto& [e, c] : coeffs_)
      r.coeffs_.emplace(e + k, ctx_->sigma_identity ? c : ctx_->sigma.apply(c, k));
    return r;
  }
  // p * t^k: exponents shift by k, coefficients unchanged.
  SkewPoly shift_right(long long k) const {
    SkewPoly r(ctx_);
    for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
  }
  // t^k p t^{-k}: coefficients twist by sigma^k, exponents unchanged.
  SkewPoly twist_coeffs(long long k) const {
    SkewPoly r(ctx_);
    for (auto& [e, c] : coeffs_)
      r.coeffs_.emplace(e, ctx_->sigma_identity ? c : ctx_->sigma.apply(c, k));
    return r;
  }
  // p * c for a coefficient c: each term picks up sigma^i(c) on the right.
  SkewPoly scaled_right(const RationalFunction& c) const {
    SkewPoly r(ctx_);
    if (c.is_zero()) return r;
    for (auto& [e, a] : coeffs_)
      r.coeffs_.emplace(e, a * (ctx_->sigma_identity ? c : ctx_->sigma.apply(c, e)));
    return r;
  }
  // c * p for a coefficient c.
  SkewPoly scaled_left(const RationalFunction& c) const {
    SkewPoly r(ctx_);
    if (c.is_zero()) return r;
    for (auto& [e, a] : coeffs_) r.coeffs_.emplace(e, c * a);
    return r;
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    a.check_context(b);
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

  size_t size_hint() const {
    size_t s = 1;
    for (auto& [e, c] : coeffs_) s += 1 + c.size_hint();
    return s;
  }

  void check_context(const SkewPoly& o) const {
    if (ctx_ == o.ctx_) return;
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
      fail(ErrorCode::FieldMismatch, "skew polynomials from different rings");
  }

 private:
  void add_term(long long e, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  SkewContextPtr ctx_;
  std::map<long long, RationalFunction> coeffs_;
};

// Right division a = q * b + r. Units of the Laurent ring are monomials,
// so each operand is stripped to mindeg 0 on its own: a = t^ka A, b = t^kb B
// with A = Q B + R an ordinary twisted polynomial division. The remainder
// satisfies span(r) < span(b); zero remainder characterises divisibility.
inline std::pair<SkewPoly, SkewPoly> skew_right_divide(const SkewPoly& a, const SkewPoly& b) {
  a.check_context(b);
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "skew division by zero");
  SkewPoly q(a.context()), zero(a.context());
  if (a.is_zero()) return {q, zero};

  long long ka = a.mindeg(), kb = b.mindeg();
  SkewPoly rem = a.shift_left(-ka), div = b.shift_left(-kb);
  const FieldAutomorphism& sigma = a.context()->sigma;
  long long n = div.maxdeg();
  RationalFunction lead = div.coeff(n);
  while (!rem.is_zero() && rem.maxdeg() >= n) {
    long long m = rem.maxdeg();
    RationalFunction qc = rem.coeff(m) * sigma.apply(lead, m - n).inverse();
    SkewPoly qterm = SkewPoly::monomial(a.context(), m - n, std::move(qc));
    q += qterm;
    rem -= qterm * div;
  }
  // a = t^ka (Q B + R) = (t^ka Q t^{-kb}) b + t^ka R.
  return {q.twist_coeffs(ka).shift_right(ka - kb), rem.shift_left(ka)};
}

// Left division a = b * q + r under the same stripping convention.
inline std::pair<SkewPoly, SkewPoly> skew_left_divide(const SkewPoly& a, const SkewPoly& b) {
  a.check_context(b);
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "skew division by zero");
  SkewPoly q(a.context()), zero(a.context());
  if (a.is_zero()) return {q, zero};

  long long ka = a.mindeg(), kb = b.mindeg();
  SkewPoly rem = a.shift_right(-ka), div = b.shift_right(-kb);
  const FieldAutomorphism& sigma = a.context()->sigma;
  long long n = div.maxdeg();
  RationalFunction lead_inv = div.coeff(n).inverse();
  while (!rem.is_zero() && rem.maxdeg() >= n) {
    long long m = rem.maxdeg();
    RationalFunction qc = sigma.apply(lead_inv * rem.coeff(m), -n);
    SkewPoly qterm = SkewPoly::monomial(a.context(), m - n, std::move(qc));
    q += qterm;
    rem -= div * qterm;
  }
  // a = (B Q + R) t^ka = b (t^{-kb} Q t^ka) + R t^ka.
  return {q.twist_coeffs(-kb).shift_right(ka - kb), rem.shift_right(ka)};
}

// Exact right quotient: a = q * b with zero remainder demanded.
inline SkewPoly skew_exact_right_quotient(const SkewPoly& a, const SkewPoly& b) {
  auto [q, r] = skew_right_divide(a, b);
  if (!r.is_zero()) fail(ErrorCode::Internal, "inexact skew division");
  return q;
}

// Left-normalises by a unit: mindeg 0 and trailing coefficient 1.
inline SkewPoly skew_left_normalize(const SkewPoly& p) {
  if (p.is_zero()) return p;
  SkewPoly q = p.shift_left(-p.mindeg());
  RationalFunction c = q.coeff(0);
  if (!c.is_one()) q = q.scaled_left(c.inverse());
  return q;
}

// Left scaling by a unit that clears the coefficient denominators and strips
// their shared rational content. Left unit multiples have the same right
// divisors, so Euclid chains may renormalise remainders this way freely;
// unlike the trailing-coefficient normalisation this never grows sizes.
inline SkewPoly skew_left_primitive(const SkewPoly& p) {
  if (p.is_zero()) return p;
  SkewPoly q = p.shift_left(-p.mindeg());
  int nv = q.context()->coeff_field.nvars();
  MultiPoly den_lcm = MultiPoly::constant(nv, Rational(1));
  MultiPoly num_gcd(nv);
  for (auto& [e, c] : q.coeffs()) {
    den_lcm = poly_lcm(den_lcm, c.den());
    num_gcd = poly_gcd(num_gcd, c.num());
  }
  // Coprime by construction: a common factor would divide some reduced
  // coefficient's numerator and denominator at once.
  RationalFunction scale = RationalFunction::from_coprime(std::move(den_lcm), std::move(num_gcd));
  if (!scale.is_one()) q = q.scaled_left(scale);
  mpz_class ngcd = 0, dlcm = 1;
  for (auto& [e, c] : q.coeffs()) {
    Rational rc = rational_content(c.num());
    mpz_gcd(ngcd.get_mpz_t(), ngcd.get_mpz_t(), rc.num().get_mpz_t());
    mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), rc.den().get_mpz_t());
  }
  Rational content(ngcd, dlcm);
  if (!content.is_one())
    q = q.scaled_left(q.context()->coeff_field.constant(content.inverse()));
  return q;
}

// Greatest common right divisor by fraction-free Euclid. One elimination
// step replaces a with sigma^{m-n}(lc b) * a - (lc a) t^{m-n} * b, which
// kills the top term of a: the replacement differs from a by a left unit
// and a left multiple of b, so the common right divisors are untouched,
// and no quotient fractions ever form because the coefficients multiply
// commutatively. Result is left-normalised; gcrd(0, 0) = 0.
inline SkewPoly gcrd(SkewPoly a, SkewPoly b) {
  a.check_context(b);
  a = skew_left_primitive(a);
  b = skew_left_primitive(b);
  if (a.is_zero()) return skew_left_normalize(b);
  if (b.is_zero()) return skew_left_normalize(a);
  const SkewContextPtr& ctx = a.context();
  const FieldAutomorphism& sigma = ctx->sigma;
  while (true) {
    while (!a.is_zero() && a.maxdeg() >= b.maxdeg()) {
      long long m = a.maxdeg(), n = b.maxdeg();
      RationalFunction d = sigma.apply(b.coeff(n), m - n);
      SkewPoly top = SkewPoly::monomial(ctx, m - n, a.coeff(m));
      a = a.scaled_left(d) - top * b;
      a = skew_left_primitive(a);
    }
    if (a.is_zero()) return skew_left_normalize(b);
    std::swap(a, b);
  }
}

// Ore pair: given p and q != 0, produces (r, s) with s != 0 and p s = q r,
// exhibiting a common right multiple. Fraction-free Euclid with cofactors:
// r_i = qs * a_i + ps * b_i throughout, and every update multiplies a
// remainder triple on the right only, which preserves the identity. One
// elimination step sends r to r * sigma^{-m}(lc r') - r' * sigma^{-n}(lc r)
// t^{m-n}, killing the top term of r without forming quotient fractions.
inline std::pair<SkewPoly, SkewPoly> ore_pair(const SkewPoly& p, const SkewPoly& q) {
  p.check_context(q);
  if (q.is_zero()) fail(ErrorCode::DivisionByZero, "ore pair against zero");
  SkewContextPtr ctx = p.context();
  SkewPoly zero(ctx), one = SkewPoly::constant(ctx, ctx->coeff_field.one());
  if (p.is_zero()) return {zero, one};

  const FieldAutomorphism& sigma = ctx->sigma;
  long long k = std::min(p.mindeg(), q.mindeg());
  // The strip by a common left unit t^{-k} cancels from the final identity.
  SkewPoly ps = p.shift_left(-k), qs = q.shift_left(-k);
  SkewPoly r_prev = qs, r_cur = ps;
  SkewPoly a_prev = one, a_cur = zero;
  SkewPoly b_prev = zero, b_cur = one;

  // Right unit applied to one remainder triple: clears denominators that are
  // not yet monomials (pulling them back through sigma, exactly so when
  // sigma maps monomials to monomials), strips shared rational content, and
  // drops the trailing power of t. Monomial denominators are left alone;
  // re-clearing them through a twist would grow the other terms instead.
  int nv = ctx->coeff_field.nvars();
  auto strip = [&](SkewPoly& r, SkewPoly& ca, SkewPoly& cb) {
    if (r.is_zero()) return;
    MultiPoly clear = MultiPoly::constant(nv, Rational(1));
    for (auto& [e, c] : r.coeffs()) {
      if (c.den().term_count() == 1) continue;
      RationalFunction pulled = sigma.apply(RationalFunction::from_poly(c.den()), -e);
      clear = poly_lcm(clear, pulled.num());
    }
    if (!clear.is_one()) {
      RationalFunction d = RationalFunction::from_poly(std::move(clear));
      r = r.scaled_right(d);
      ca = ca.scaled_right(d);
      cb = cb.scaled_right(d);
    }
    mpz_class ngcd = 0, dlcm = 1;
    for (auto& [e, c] : r.coeffs()) {
      Rational rc = rational_content(c.num());
      mpz_gcd(ngcd.get_mpz_t(), ngcd.get_mpz_t(), rc.num().get_mpz_t());
      mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), rc.den().get_mpz_t());
    }
    Rational content(ngcd, dlcm);
    if (!content.is_one()) {
      RationalFunction ic = ctx->coeff_field.constant(content.inverse());
      r = r.scaled_right(ic);
      ca = ca.scaled_right(ic);
      cb = cb.scaled_right(ic);
    }
    long long sh = r.mindeg();
    if (sh != 0) {
      r = r.shift_right(-sh);
      ca = ca.shift_right(-sh);
      cb = cb.shift_right(-sh);
    }
  };
  strip(r_prev, a_prev, b_prev);
  strip(r_cur, a_cur, b_cur);

  while (true) {
    while (!r_prev.is_zero() && r_prev.maxdeg() >= r_cur.maxdeg()) {
      long long m = r_prev.maxdeg(), n = r_cur.maxdeg();
      RationalFunction s = sigma.apply(r_cur.coeff(n), -m);
      SkewPoly xm = SkewPoly::monomial(ctx, m - n, sigma.apply(r_prev.coeff(m), -n));
      r_prev = r_prev.scaled_right(s) - r_cur * xm;
      a_prev = a_prev.scaled_right(s) - a_cur * xm;
      b_prev = b_prev.scaled_right(s) - b_cur * xm;
      strip(r_prev, a_prev, b_prev);
    }
    if (r_prev.is_zero()) break;
    std::swap(r_prev, r_cur);
    std::swap(a_prev, a_cur);
    std::swap(b_prev, b_cur);
  }
  // 0 = qs * a_prev + ps * b_prev, so ps * b_prev = qs * (-a_prev); the
  // strip cancels, giving p * b_prev = q * (-a_prev).
  if (b_prev.is_zero()) fail(ErrorCode::Internal, "degenerate ore pair");
  return {-a_prev, b_prev};
}

// Right fraction num * den^{-1} over the twisted Laurent ring. Kept with
// gcrd(num, den) a unit and den normalised to mindeg 0, trailing
// coefficient 1, which pins the representative uniquely.
class SkewFraction {
 public:
  SkewFraction() = default;
  explicit SkewFraction(const SkewContextPtr& ctx)
      : num_(ctx), den_(SkewPoly::constant(ctx, ctx->coeff_field.one())) {}
  SkewFraction(SkewPoly num, SkewPoly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_context(den_);
    if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "skew fraction with zero denominator");
    reduce();
  }

  static SkewFraction from_poly(SkewPoly p) {
    SkewContextPtr ctx = p.context();
    return SkewFraction(std::move(p), SkewPoly::constant(ctx, ctx->coeff_field.one()));
  }

  const SkewPoly& num() const { return num_; }
  const SkewPoly& den() const { return den_; }
  const SkewContextPtr& context() const { return num_.context(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  SkewFraction operator-() const {
    SkewFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend SkewFraction operator+(const SkewFraction& a, const SkewFraction& b) {
    a.num_.check_context(b.num_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // q2 s = q1 r is a common right multiple m; a = p1 r m^{-1}, b = p2 s m^{-1}.
    auto [r, s] = ore_pair(b.den_, a.den_);
    return SkewFraction(a.num_ * r + b.num_ * s, a.den_ * r);
  }
  friend SkewFraction operator-(const SkewFraction& a, const SkewFraction& b) { return a + (-b); }

  friend SkewFraction operator*(const SkewFraction& a, const SkewFraction& b) {
    a.num_.check_context(b.num_);
    if (a.is_zero() || b.is_zero()) return SkewFraction(a.context());
    if (b.is_polynomial() && a.is_polynomial())
      return SkewFraction(a.num_ * b.num_, a.den_ * b.den_);
    // q1^{-1} p2 = r s^{-1} from p2 s = q1 r.
    auto [r, s] = ore_pair(b.num_, a.den_);
    return SkewFraction(a.num_ * r, b.den_ * s);
  }

  friend SkewFraction operator/(const SkewFraction& a, const SkewFraction& b) {
    return a * b.inverse();
  }

  SkewFraction& operator+=(const SkewFraction& o) { return *this = *this + o; }
  SkewFraction& operator-=(const SkewFraction& o) { return *this = *this - o; }
  SkewFraction& operator*=(const SkewFraction& o) { return *this = *this * o; }

  SkewFraction inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero skew fraction");
    SkewFraction r(context());
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
  }

  // Semantic equality through a common right multiple of the denominators;
  // does not presume reduced representatives.
  friend bool ore_equal(const SkewFraction& a, const SkewFraction& b) {
    a.num_.check_context(b.num_);
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    auto [r, s] = ore_pair(a.den_, b.den_);
    return a.num_ * s == b.num_ * r;
  }
  friend bool operator==(const SkewFraction& a, const SkewFraction& b) { return ore_equal(a, b); }
  friend bool operator!=(const SkewFraction& a, const SkewFraction& b) { return !(a == b); }

  // Endpoints of the degree interval: the single-variable polytope of the
  // fraction, well defined on representatives.
  long long lo_degree() const {
    if (is_zero()) fail(ErrorCode::ZeroElement, "degree interval of zero");
    return num_.mindeg() - den_.mindeg();
  }
  long long hi_degree() const {
    if (is_zero()) fail(ErrorCode::ZeroElement, "degree interval of zero");
    return num_.maxdeg() - den_.maxdeg();
  }

  size_t size_hint() const { return num_.size_hint() + den_.size_hint(); }

 private:
  // Size cap for exact reduction. Euclid over a twisted Laurent ring grows
  // coefficients exponentially along the chain, so canonical reduction is
  // only worthwhile while representatives stay moderate. Larger fractions
  // are carried unreduced: ore_equal and the degree interval read through
  // common right factors, so no observable behaviour depends on it.
  static constexpr size_t kReduceLimit = 4096;

  void reduce() {
    if (num_.is_zero()) {
      den_ = SkewPoly::constant(context(), context()->coeff_field.one());
      return;
    }
    if (num_.size_hint() + den_.size_hint() > kReduceLimit) {
      long long k = std::min(num_.mindeg(), den_.mindeg());
      if (k != 0) {
        num_ = num_.shift_right(-k);
        den_ = den_.shift_right(-k);
      }
      return;
    }
    SkewPoly g = gcrd(num_, den_);
    if (!g.is_unit()) {
      num_ = skew_exact_right_quotient(num_, g);
      den_ = skew_exact_right_quotient(den_, g);
    }
    long long k = den_.mindeg();
    if (k != 0) {
      num_ = num_.shift_right(-k);
      den_ = den_.shift_right(-k);
    }
    RationalFunction c = den_.coeff(0);
    if (!c.is_one()) {
      RationalFunction ci = c.inverse();
      num_ = num_.scaled_right(ci);
      den_ = den_.scaled_right(ci);
    }
  }

  SkewPoly num_, den_;
};

// The Ore quotient field of Q(u)[t^{+-1}; sigma] as a field object.
class SkewField {
 public:
  using Elem = SkewFraction;

  explicit SkewField(SkewContextPtr ctx) : ctx_(std::move(ctx)) {}
  SkewField(FunctionField coeff_field, FieldAutomorphism sigma, std::string var_name = "t")
      : ctx_(make_skew_context(std::move(coeff_field), std::move(sigma), std::move(var_name))) {}

  const SkewContextPtr& context() const { return ctx_; }
  const FunctionField& coeff_field() const { return ctx_->coeff_field; }
  const FieldAutomorphism& sigma() const { return ctx_->sigma; }

  Elem zero() const { return Elem(ctx_); }
  Elem one() const { return Elem::from_poly(SkewPoly::constant(ctx_, ctx_->coeff_field.one())); }
  Elem constant(const Rational& c) const {
    return Elem::from_poly(SkewPoly::constant(ctx_, ctx_->coeff_field.constant(c)));
  }
  Elem coeff_elem(RationalFunction c) const {
    return Elem::from_poly(SkewPoly::constant(ctx_, std::move(c)));
  }
  Elem variable(long long power = 1) const {
    return Elem::from_poly(SkewPoly::monomial(ctx_, power, ctx_->coeff_field.one()));
  }
  Elem monomial(long long exp, RationalFunction c) const {
    return Elem::from_poly(SkewPoly::monomial(ctx_, exp, std::move(c)));
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return ore_equal(a, b); }
  size_t size_hint(const Elem& a) const { return a.size_hint(); }
  bool commutative() const { return ctx_->sigma_identity; }

  std::string str(const Elem& a) const;
  Elem parse(const std::string& text) const;

  friend bool operator==(const SkewField& a, const SkewField& b) {
    return *a.ctx_ == *b.ctx_;
  }
  friend bool operator!=(const SkewField& a, const SkewField& b) { return !(a == b); }

 private:
  std::string poly_str(const SkewPoly& p) const;
  SkewPoly poly_parse(detail::PolyLexer& lx) const;

  SkewContextPtr ctx_;
};

// ---- text form ----------------------------------------------------------
//
// elem   := poly | '(' poly ')' '/' '(' poly ')'
// poly   := ['-'] term (('+' | '-') term)*
// term   := atom ('*' atom)*
// atom   := '(' coefficient ')' | rational | name ('^' integer)?
//
// Atoms multiply in the written order (the product is twisted). `name` is
// the Laurent variable or a coefficient-field variable; exponents may be
// negative on the Laurent variable and on coefficient variables.

inline std::string SkewField::poly_str(const SkewPoly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : p.coeffs()) {
    if (!first) out += " + ";
    first = false;
    std::string tpart;
    if (e != 0) {
      tpart = ctx_->var_name;
      if (e != 1) tpart += "^" + std::to_string(e);
    }
    if (tpart.empty()) {
      // Bare only when it re-parses as a plain number; otherwise protect.
      if (c.is_constant() && c.is_polynomial() && c.sign() > 0)
        out += c.num().str(coeff_field().names());
      else
        out += "(" + coeff_field().str(c) + ")";
    } else if (c.is_one()) {
      out += tpart;
    } else {
      out += "(" + coeff_field().str(c) + ")*" + tpart;
    }
  }
  return out;
}

inline SkewPoly SkewField::poly_parse(detail::PolyLexer& lx) const {
  SkewPoly acc(ctx_);
  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.done()) {
      if (first) lx.bail("empty skew polynomial");
      break;
    }
    bool negative = false;
    if (!first) {
      if (lx.eat('+')) negative = false;
      else if (lx.eat('-')) negative = true;
      else break;
    } else {
      negative = lx.eat('-');
      first = false;
    }

    SkewPoly term = SkewPoly::constant(ctx_, coeff_field().one());
    bool any = false;
    while (true) {
      lx.skip_ws();
      if (lx.eat('(')) {
        size_t start = lx.i;
        int depth = 1;
        while (lx.i < lx.s.size() && depth > 0) {
          if (lx.s[lx.i] == '(') ++depth;
          else if (lx.s[lx.i] == ')') --depth;
          ++lx.i;
        }
        if (depth != 0) lx.bail("unbalanced parentheses");
        std::string inner = lx.s.substr(start, lx.i - 1 - start);
        term *= SkewPoly::constant(ctx_, coeff_field().parse(inner));
        any = true;
      } else if (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
        term *= SkewPoly::constant(ctx_, coeff_field().constant(Rational::parse(lx.number())));
        any = true;
      } else if (lx.i < lx.s.size() &&
                 (std::isalpha(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_')) {
        std::string n = lx.name();
        long long e = 1;
        if (lx.eat('^')) e = lx.integer();
        if (n == ctx_->var_name) {
          term *= SkewPoly::monomial(ctx_, e, coeff_field().one());
        } else {
          int vi = -1;
          for (size_t k = 0; k < coeff_field().names().size(); ++k)
            if (coeff_field().names()[k] == n) vi = static_cast<int>(k);
          if (vi < 0) lx.bail("unknown variable '" + n + "'");
          term *= SkewPoly::constant(
              ctx_, coeff_field().variable(vi, 1).pow(e));
        }
        any = true;
      } else {
        lx.bail("expected factor");
      }
      if (!lx.eat('*')) break;
    }
    if (!any) lx.bail("empty term");
    if (negative) term = -term;
    acc += term;
  }
  return acc;
}

inline std::string SkewField::str(const Elem& a) const {
  if (a.is_polynomial()) return poly_str(a.num());
  return "(" + poly_str(a.num()) + ")/(" + poly_str(a.den()) + ")";
}

inline SkewField::Elem SkewField::parse(const std::string& text) const {
  detail::PolyLexer lx(text);
  lx.skip_ws();
  // Fraction form requires the top level to be exactly (num)/(den); a
  // leading '(' that closes before '/' reopens as a plain polynomial.
  if (lx.peek('(')) {
    size_t probe = lx.i + 1;
    int depth = 1;
    while (probe < lx.s.size() && depth > 0) {
      if (lx.s[probe] == '(') ++depth;
      else if (lx.s[probe] == ')') --depth;
      ++probe;
    }
    while (probe < lx.s.size() && std::isspace(static_cast<unsigned char>(lx.s[probe]))) ++probe;
    if (depth == 0 && probe < lx.s.size() && lx.s[probe] == '/') {
      lx.eat('(');
      SkewPoly num = poly_parse(lx);
      if (!lx.eat(')')) lx.bail("expected ')'");
      if (!lx.eat('/')) lx.bail("expected '/'");
      if (!lx.eat('(')) lx.bail("expected '('");
      SkewPoly den = poly_parse(lx);
      if (!lx.eat(')')) lx.bail("expected ')'");
      if (!lx.done()) lx.bail("trailing input");
      return Elem(std::move(num), std::move(den));
    }
  }
  SkewPoly p = poly_parse(lx);
  if (!lx.done()) lx.bail("trailing input");
  return Elem::from_poly(std::move(p));
}

}  // namespace agr
