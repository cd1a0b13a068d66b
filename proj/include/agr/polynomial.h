#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agr/rational.h"

namespace agr {

// Exponent vector; length = variable count of the ambient polynomial ring.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded lexicographic: higher total degree first, then lex on exponents.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

// Multivariate polynomial over the rationals. Terms are kept sorted in
// descending graded-lex order with no zero coefficients, so representation
// is canonical and equality is structural.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, Rational c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars, 0), std::move(c));
    return p;
  }
  static MultiPoly variable(int nvars, int index, int power = 1) {
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[index] = power;
    p.terms_.emplace_back(std::move(m), Rational(1));
    return p;
  }
  static MultiPoly from_terms(int nvars, std::vector<Term> terms) {
    std::map<Monomial, Rational, MonomialDesc> acc;
    for (auto& [m, c] : terms) {
      if (c.is_zero()) continue;
      auto [it, fresh] = acc.emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
    MultiPoly p(nvars);
    p.terms_.assign(acc.begin(), acc.end());
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second.is_one(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term in graded-lex (terms_ is descending, so index 0).
  const Term& leading() const { return terms_.front(); }
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_[0].first); }
  int degree_in(int var) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  Rational constant_term() const {
    if (terms_.empty()) return Rational(0);
    const Term& last = terms_.back();
    return total_degree(last.first) == 0 ? last.second : Rational(0);
  }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Monomial, Rational, MonomialDesc> acc;
    Monomial m(a.nvars_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        Rational c = ca * cb;
        auto [it, fresh] = acc.emplace(m, c);
        if (!fresh) {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    r.terms_.assign(acc.begin(), acc.end());
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [m, k] : r.terms_) k *= c;
    return r;
  }

  MultiPoly shifted(const Monomial& by) const {
    MultiPoly r(nvars_);
    r.terms_ = terms_;
    for (auto& [m, c] : r.terms_)
      for (int i = 0; i < nvars_; ++i) m[i] += by[i];
    return r;
  }

  MultiPoly pow(int e) const {
    MultiPoly r = constant(nvars_, Rational(1));
    MultiPoly base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  // Componentwise minimum of the support; the largest monomial dividing every term.
  Monomial monomial_content() const {
    Monomial m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_[0].first;
    for (auto& [mm, c] : terms_)
      for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], mm[i]);
    return m;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) {  // arbitrary total order for maps
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      int c = grlex_cmp(a.terms_[i].first, b.terms_[i].first);
      if (c != 0) return c < 0;
      if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
    }
    return false;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= point[i];
      acc += t;
    }
    return acc;
  }

  size_t size_hint() const {
    size_t s = 1;
    for (auto& [m, c] : terms_) s += 2 + c.size_hint() / 8 + total_degree(m);
    return s;
  }

  std::string str(const std::vector<std::string>& names) const;
  static MultiPoly parse(const std::string& text, const std::vector<std::string>& names);

 private:
  struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
  };

  static MultiPoly merged(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) cmp = -1;
      else if (j == b.terms_.size()) cmp = 1;
      else cmp = grlex_cmp(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        auto t = b.terms_[j++];
        if (subtract) t.second = -t.second;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = subtract ? a.terms_[i].second - b.terms_[j].second
                              : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return r;
  }

  int nvars_;
  std::vector<Term> terms_;
};

// Exact division: returns f / g when g divides f, nullopt otherwise.
inline std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  MultiPoly rem = f;
  std::vector<MultiPoly::Term> qterms;
  const auto& [gm, gc] = g.leading();
  Monomial q(f.nvars());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    for (int i = 0; i < f.nvars(); ++i) {
      if (rm[i] < gm[i]) return std::nullopt;
      q[i] = rm[i] - gm[i];
    }
    Rational qc = rc / gc;
    qterms.emplace_back(q, qc);
    MultiPoly piece(f.nvars());
    piece = g.shifted(q).scaled(qc);
    rem -= piece;
  }
  return MultiPoly::from_terms(f.nvars(), std::move(qterms));
}

inline MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_divide(f, g);
  if (!q) fail(ErrorCode::Internal, "inexact polynomial division");
  return *q;
}

// Rational content: f = content * primitive_part with the primitive part having
// coprime integer coefficients and positive leading coefficient.
inline Rational rational_content(const MultiPoly& f) {
  if (f.is_zero()) return Rational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  if (f.leading().second.sign() < 0) content = -content;
  return content;
}

inline MultiPoly primitive_part(const MultiPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(rational_content(f).inverse());
}

namespace detail {

// View of f as a univariate polynomial in `var` with MultiPoly coefficients.
inline std::map<int, MultiPoly> univariate_view(const MultiPoly& f, int var) {
  std::map<int, MultiPoly> out;
  for (auto& [m, c] : f.terms()) {
    Monomial rest = m;
    int e = rest[var];
    rest[var] = 0;
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, MultiPoly(f.nvars())).first;
    it->second += MultiPoly::from_terms(f.nvars(), {{rest, c}});
  }
  return out;
}

inline MultiPoly from_univariate(const std::map<int, MultiPoly>& coeffs, int var, int nvars) {
  MultiPoly out(nvars);
  for (auto& [e, c] : coeffs) {
    Monomial shift(nvars, 0);
    shift[var] = e;
    out += c.shifted(shift);
  }
  return out;
}

}  // namespace detail

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

namespace detail {

// Leading coefficient of f viewed as univariate in `var`.
inline MultiPoly leading_in(const MultiPoly& f, int var) {
  auto view = univariate_view(f, var);
  return view.rbegin()->second;
}

// Standard pseudo-remainder: prem(a, b) = lc(b)^(da-db+1) * a mod b, padded
// exactly even when sparse cancellation shortens the elimination.
inline MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int var) {
  int db = b.degree_in(var);
  MultiPoly lb = leading_in(b, var);
  MultiPoly rem = a;
  int e = a.degree_in(var) - db + 1;
  while (!rem.is_zero() && rem.degree_in(var) >= db) {
    auto rv = univariate_view(rem, var);
    int dr = rv.rbegin()->first;
    MultiPoly lr = rv.rbegin()->second;
    Monomial shift(a.nvars(), 0);
    shift[var] = dr - db;
    rem = rem * lb - b * lr.shifted(shift);
    --e;
  }
  for (; e > 0; --e) rem *= lb;
  return rem;
}

// gcd of polynomials with trivial monomial content, both nonzero, by the
// subresultant polynomial remainder sequence in the main variable. The
// subresultant divisors keep intermediate coefficients polynomial-sized.
inline MultiPoly gcd_core(MultiPoly f, MultiPoly g) {
  if (f.is_constant() || g.is_constant())
    return MultiPoly::constant(f.nvars(), Rational(1));

  // Main variable: first one appearing in either polynomial.
  int var = -1;
  for (int i = 0; i < f.nvars() && var < 0; ++i)
    if (f.degree_in(i) > 0 || g.degree_in(i) > 0) var = i;

  auto content_in = [&](const MultiPoly& p) {
    auto view = univariate_view(p, var);
    MultiPoly c(p.nvars());
    for (auto& [e, coeff] : view) {
      c = poly_gcd(c, coeff);
      if (c.is_one()) break;
    }
    return c;
  };

  MultiPoly cf = content_in(f), cg = content_in(g);
  MultiPoly fp = divide_exact(f, cf), gp = divide_exact(g, cg);
  MultiPoly unit_content = poly_gcd(cf, cg);

  if (fp.degree_in(var) < gp.degree_in(var)) std::swap(fp, gp);
  MultiPoly one = MultiPoly::constant(f.nvars(), Rational(1));
  MultiPoly hsub = one, glc = one;
  MultiPoly core;
  while (true) {
    int delta = fp.degree_in(var) - gp.degree_in(var);
    MultiPoly rem = pseudo_rem(fp, gp, var);
    if (rem.is_zero()) {
      core = gp;
      break;
    }
    if (rem.degree_in(var) == 0) {
      core = one;
      break;
    }
    MultiPoly divisor = glc * hsub.pow(delta);
    fp = std::move(gp);
    gp = divide_exact(rem, divisor);
    glc = leading_in(fp, var);
    if (delta > 0) hsub = divide_exact(glc.pow(delta), hsub.pow(delta - 1));
  }
  if (!core.is_constant()) core = divide_exact(core, content_in(core));
  return unit_content * core;
}

}  // namespace detail

// Canonical gcd over the rationals: primitive integer coefficients, positive
// leading coefficient. poly_gcd(0, 0) = 0.
inline MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  MultiPoly fp = primitive_part(f), gp = primitive_part(g);
  if (fp == gp) return fp;

  Monomial mf = fp.monomial_content(), mg = gp.monomial_content();
  Monomial shared(f.nvars());
  Monomial neg_mf(f.nvars()), neg_mg(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    shared[i] = std::min(mf[i], mg[i]);
    neg_mf[i] = -mf[i];
    neg_mg[i] = -mg[i];
  }
  fp = fp.shifted(neg_mf);
  gp = gp.shifted(neg_mg);

  MultiPoly core;
  if (try_divide(fp, gp)) core = gp;
  else if (try_divide(gp, fp)) core = fp;
  else core = detail::gcd_core(fp, gp);
  core = primitive_part(core);
  return core.shifted(shared);
}

// Canonical lcm matching poly_gcd's normalization; poly_lcm(f, 0) = 0.
inline MultiPoly poly_lcm(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.nvars());
  return primitive_part(divide_exact(f * g, poly_gcd(f, g)));
}

}  // namespace agr
