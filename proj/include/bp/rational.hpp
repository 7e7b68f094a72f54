#pragma once
/**
 * @file rational.hpp
 * @brief Exact rational numbers backed by GMP, always held in lowest terms
 *        with positive denominator, plus small combinatorial helpers.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bp/errors.hpp"

namespace bp {

/**
 * Arbitrary-precision rational number.
 *
 * Canonical form (lowest terms, positive denominator) is maintained by every
 * constructor and operation, so equality is plain structural equality and
 * serialization is unambiguous.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(long n) : v_(n) {}                    // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parse "num", "-num", or "num/den" (den > 0 after canonicalization).
  static Rational from_string(std::string_view text);

  const mpq_class& raw() const { return v_; }
  Rational numerator() const { return Rational(mpq_class(v_.get_num())); }
  Rational denominator() const { return Rational(mpq_class(v_.get_den())); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;
  /// Integer power; negative exponents invert (throws DivisionByZero on 0).
  Rational pow(long e) const;

  /// Exact conversion to long; throws InvalidInput when not an integer or too big.
  long to_long() const;
  double to_double() const { return v_.get_d(); }
  /// Canonical text form: "7", "-3", "2/15".
  std::string str() const;

  /// Floor of the rational as an integer value.
  Rational floor() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// n! as a Rational; n must be >= 0.
Rational factorial(long n);

/// Generalized binomial coefficient: x(x-1)...(x-j+1)/j! for j >= 0.
Rational binomial(const Rational& x, long j);

}  // namespace bp
