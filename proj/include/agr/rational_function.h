#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "agr/polynomial.h"

namespace agr {

// Reduced fraction of multivariate polynomials over Q. Canonical form:
// gcd(num, den) constant, den monic in graded-lex, zero stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(MultiPoly::constant(0, Rational(1))) {}

  RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) fail(ErrorCode::FieldMismatch, "fraction over mixed rings");
    if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    reduce();
  }

  static RationalFunction from_poly(MultiPoly p) {
    int n = p.nvars();
    return RationalFunction(std::move(p), MultiPoly::constant(n, Rational(1)));
  }

  // Trusted factory for parts already known to be coprime: skips the gcd pass
  // and only normalizes the zero numerator and the monic denominator.
  static RationalFunction from_coprime(MultiPoly num, MultiPoly den) {
    if (num.nvars() != den.nvars()) fail(ErrorCode::FieldMismatch, "fraction over mixed rings");
    if (den.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    RationalFunction r(num.nvars());
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero())
      r.den_ = MultiPoly::constant(r.nvars(), Rational(1));
    else
      r.normalize_monic();
    return r;
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    a.check_compatible(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    MultiPoly g = poly_gcd(a.den_, b.den_);
    MultiPoly da = divide_exact(a.den_, g), db = divide_exact(b.den_, g);
    MultiPoly num = a.num_ * db + b.num_ * da;
    if (num.is_zero()) return RationalFunction(a.nvars());
    MultiPoly g2 = poly_gcd(num, g);
    return RationalFunction(divide_exact(num, g2), divide_exact(a.den_, g2) * db);
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.nvars());
    MultiPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    return RationalFunction(divide_exact(a.num_, g1) * divide_exact(b.num_, g2),
                            divide_exact(a.den_, g2) * divide_exact(b.den_, g1));
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction pow(long long e) const {
    RationalFunction base = *this;
    if (e < 0) {
      base = inverse();
      e = -e;
    }
    RationalFunction r = from_poly(MultiPoly::constant(nvars(), Rational(1)));
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  RationalFunction inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    RationalFunction r(nvars());
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_monic();
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
  friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  // Defined whenever the denominator does not vanish at the point.
  std::optional<Rational> evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(point) / d;
  }

  // Sign of the graded-lex leading coefficient of the numerator.
  int sign() const { return num_.is_zero() ? 0 : num_.leading().second.sign(); }

  size_t size_hint() const { return num_.size_hint() + den_.size_hint(); }

 private:
  explicit RationalFunction(int nvars)
      : num_(nvars), den_(MultiPoly::constant(nvars, Rational(1))) {}

  void check_compatible(const RationalFunction& o) const {
    if (nvars() != o.nvars()) fail(ErrorCode::FieldMismatch, "rational functions over different rings");
  }

  void normalize_monic() {
    Rational lead = den_.leading().second;
    if (!lead.is_one()) {
      Rational inv = lead.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(nvars(), Rational(1));
      return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant() || !g.leading().second.is_one()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    normalize_monic();
  }

  MultiPoly num_, den_;
};

// The field Q(x_1, ..., x_n) as a value object; n = 0 gives plain Q.
class FunctionField {
 public:
  using Elem = RationalFunction;

  FunctionField() = default;
  explicit FunctionField(int nvars) : names_(default_names(nvars)) {}
  explicit FunctionField(std::vector<std::string> names) : names_(std::move(names)) {}

  static std::vector<std::string> default_names(int n) {
    if (n == 1) return {"t"};
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return names;
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  Elem zero() const { return Elem::from_poly(MultiPoly(nvars())); }
  Elem one() const { return constant(Rational(1)); }
  Elem constant(const Rational& c) const {
    return Elem::from_poly(MultiPoly::constant(nvars(), c));
  }
  Elem variable(int i, int power = 1) const {
    if (power >= 0) return Elem::from_poly(MultiPoly::variable(nvars(), i, power));
    return Elem(MultiPoly::constant(nvars(), Rational(1)), MultiPoly::variable(nvars(), i, -power));
  }
  // Laurent monomial with coefficient: c * prod x_i^{e_i}, negative exponents allowed.
  Elem monomial(const Rational& c, const std::vector<long long>& exps) const {
    MultiPoly num = MultiPoly::constant(nvars(), c), den = MultiPoly::constant(nvars(), Rational(1));
    Monomial mn(nvars(), 0), md(nvars(), 0);
    for (int i = 0; i < nvars(); ++i) {
      if (exps[i] >= 0) mn[i] = static_cast<int>(exps[i]);
      else md[i] = static_cast<int>(-exps[i]);
    }
    return Elem(num.shifted(mn), den.shifted(md));
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  size_t size_hint(const Elem& a) const { return a.size_hint(); }
  bool commutative() const { return true; }

  std::string str(const Elem& a) const;
  Elem parse(const std::string& text) const;

  void check_element(const Elem& a) const {
    if (a.nvars() != nvars()) fail(ErrorCode::FieldMismatch, "element from a different field");
  }

  friend bool operator==(const FunctionField& a, const FunctionField& b) {
    return a.names_ == b.names_;
  }
  friend bool operator!=(const FunctionField& a, const FunctionField& b) { return !(a == b); }

 private:
  std::vector<std::string> names_;
};

// Plain Q with the same field-object interface.
class RationalField {
 public:
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem constant(const Rational& c) const { return c; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  size_t size_hint(const Elem& a) const { return a.size_hint(); }
  bool commutative() const { return true; }
  std::string str(const Elem& a) const { return a.str(); }
  Elem parse(const std::string& text) const { return Rational::parse(text); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// ---- text form ----------------------------------------------------------
//
// poly   := ['-'] term (('+' | '-') term)*
// term   := factor ('*' factor)*
// factor := rational | name ('^' integer)?
//
// Canonical printing uses '+' joins with signs folded into coefficients,
// descending graded-lex term order, no '^1', no exponent-zero factors, and
// coefficient 1 omitted in front of a nonempty monomial.

namespace detail {

struct PolyLexer {
  const std::string& s;
  size_t i = 0;

  explicit PolyLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void bail(const std::string& what) {
    throw ParseError(what + " in '" + s + "'", 1, static_cast<int>(i) + 1);
  }
  std::string number() {  // digits, optionally 'a/b'
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) bail("expected number");
    if (i < s.size() && s[i] == '/') {
      size_t save = i++;
      size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) i = save;  // '/' belongs to an enclosing fraction
    }
    return s.substr(start, i - start);
  }
  std::string name() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (i == start) bail("expected variable name");
    return s.substr(start, i - start);
  }
  long long integer() {
    skip_ws();
    bool negative = eat('-');
    std::string digits = number();
    if (digits.find('/') != std::string::npos) bail("expected integer exponent");
    long long v = std::stoll(digits);
    return negative ? -v : v;
  }
};

// Parses one poly; exponents must be nonnegative here (Laurent forms live in
// the skew and twisted layers, which handle exponents themselves).
inline MultiPoly parse_poly(PolyLexer& lx, const std::vector<std::string>& names) {
  int nvars = static_cast<int>(names.size());
  auto var_index = [&](const std::string& n) {
    for (size_t k = 0; k < names.size(); ++k)
      if (names[k] == n) return static_cast<int>(k);
    lx.bail("unknown variable '" + n + "'");
  };

  MultiPoly acc(nvars);
  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.done()) {
      if (first) lx.bail("empty polynomial");
      break;
    }
    bool negative = false;
    if (!first) {
      if (lx.eat('+')) negative = false;
      else if (lx.eat('-')) negative = true;
      else break;  // delimiter of an enclosing construct
    } else {
      negative = lx.eat('-');
      first = false;
    }

    Rational coeff(1);
    Monomial mono(nvars, 0);
    bool any_factor = false;
    while (true) {
      lx.skip_ws();
      if (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
        coeff *= Rational::parse(lx.number());
        any_factor = true;
      } else if (lx.i < lx.s.size() &&
                 (std::isalpha(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_')) {
        int vi = var_index(lx.name());
        long long e = 1;
        if (lx.eat('^')) e = lx.integer();
        if (e < 0) lx.bail("negative exponent in polynomial");
        mono[vi] += static_cast<int>(e);
        any_factor = true;
      } else {
        lx.bail("expected factor");
      }
      if (!lx.eat('*')) break;
    }
    if (!any_factor) lx.bail("empty term");
    if (negative) coeff = -coeff;
    acc += MultiPoly::from_terms(nvars, {{mono, coeff}});
  }
  return acc;
}

}  // namespace detail

inline std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms_.size(); ++k) {
    const auto& [m, c] = terms_[k];
    bool negative = c.sign() < 0;
    Rational a = negative ? -c : c;
    std::string mono;
    for (size_t i = 0; i < names.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    std::string piece = mono.empty() ? a.str() : (a.is_one() ? mono : a.str() + "*" + mono);
    if (k == 0) out += negative ? "-" + piece : piece;
    else out += (negative ? " - " : " + ") + piece;
  }
  return out;
}

inline MultiPoly MultiPoly::parse(const std::string& text, const std::vector<std::string>& names) {
  detail::PolyLexer lx(text);
  MultiPoly p = detail::parse_poly(lx, names);
  if (!lx.done()) lx.bail("trailing input");
  return p;
}

inline std::string FunctionField::str(const Elem& a) const {
  if (a.is_polynomial()) return a.num().str(names_);
  return "(" + a.num().str(names_) + ")/(" + a.den().str(names_) + ")";
}

inline FunctionField::Elem FunctionField::parse(const std::string& text) const {
  detail::PolyLexer lx(text);
  MultiPoly num(nvars()), den = MultiPoly::constant(nvars(), Rational(1));
  if (lx.eat('(')) {
    num = detail::parse_poly(lx, names_);
    if (!lx.eat(')')) lx.bail("expected ')'");
    if (lx.eat('/')) {
      if (!lx.eat('(')) lx.bail("expected '('");
      den = detail::parse_poly(lx, names_);
      if (!lx.eat(')')) lx.bail("expected ')'");
    }
  } else {
    num = detail::parse_poly(lx, names_);
  }
  if (!lx.done()) lx.bail("trailing input");
  return Elem(std::move(num), std::move(den));
}

}  // namespace agr
