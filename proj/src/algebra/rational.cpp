#include "ifcheck/algebra/rational.hpp"

#include <ostream>

namespace ifcheck::algebra {

Rational::Rational(Integer numerator) : num_(std::move(numerator)), den_(1) {}

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw DivisionByZero();
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::unnormalized(Integer numerator, Integer denominator) {
  Rational r;
  r.num_ = std::move(numerator);
  r.den_ = std::move(denominator);
  return r;
}

bool Rational::is_normalized() const {
  if (den_ <= 0) return false;
  if (num_ == 0) return den_ == 1;
  return boost::multiprecision::gcd(num_, den_) == 1;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational rat_plus(const Rational& a, const Rational& b) {
  return Rational(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                  a.denominator() * b.denominator());
}

Rational rat_times(const Rational& a, const Rational& b) {
  return Rational(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

Rational rat_addInv(const Rational& a) { return Rational(-a.numerator(), a.denominator()); }

Rational rat_multInv(const Rational& a) {
  if (a.is_zero()) throw DivisionByZero();
  return Rational(a.denominator(), a.numerator());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ifcheck::algebra
