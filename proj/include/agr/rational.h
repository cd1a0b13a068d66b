#pragma once

#include <gmpxx.h>

#include <string>

#include "agr/error.h"

namespace agr {

// Arbitrary-precision rational, always canonical: gcd(num, den) = 1, den >= 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(const std::string& text);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Canonical text form: "n" for integers, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  size_t size_hint() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) + mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  }

 private:
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
  if (text.empty()) fail(ErrorCode::SyntaxError, "empty rational literal");
  size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) fail(ErrorCode::SyntaxError, "bad rational literal '" + text + "'");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail(ErrorCode::SyntaxError, "bad rational literal '" + text + "'");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') fail(ErrorCode::SyntaxError, "bad rational literal '" + text + "'");
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(mpz_class(text));
  }
  std::string n = text.substr(0, slash), d = text.substr(slash + 1);
  check_int(n);
  check_int(d);
  mpz_class den(d);
  if (den == 0) fail(ErrorCode::ZeroDenominator, "rational literal '" + text + "'");
  return Rational(mpz_class(n), den);
}

}  // namespace agr
