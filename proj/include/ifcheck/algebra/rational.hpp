#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ifcheck::algebra {

using Integer = boost::multiprecision::cpp_int;

/// Raised by the multiplicative inverse of zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact fraction. Always normalized: positive denominator, coprime parts,
/// zero stored as 0/1. Equality compares the stored parts.
class Rational {
 public:
  Rational() = default;
  Rational(Integer numerator);  // NOLINT(google-explicit-constructor)
  Rational(Integer numerator, Integer denominator);

  /// Stores the parts as given. Only for exercising the law checker against
  /// a broken implementation.
  static Rational unnormalized(Integer numerator, Integer denominator);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_normalized() const;

  std::string str() const;  // "n/d", denominator always shown

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  Integer num_{0};
  Integer den_{1};
};

Rational rat_plus(const Rational& a, const Rational& b);
Rational rat_times(const Rational& a, const Rational& b);
Rational rat_addInv(const Rational& a);
/// Throws DivisionByZero for a == 0.
Rational rat_multInv(const Rational& a);

inline Rational operator+(const Rational& a, const Rational& b) { return rat_plus(a, b); }
inline Rational operator*(const Rational& a, const Rational& b) { return rat_times(a, b); }
inline Rational operator-(const Rational& a) { return rat_addInv(a); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ifcheck::algebra
