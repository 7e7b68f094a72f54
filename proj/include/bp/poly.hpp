#pragma once
/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over exact rationals.
 *
 * Coefficients are stored in ascending order with no trailing zeros, so the
 * representation of every polynomial (including zero: an empty vector) is
 * unique and equality is structural.  degree() returns -1 for the zero
 * polynomial, acting as minus infinity in degree arithmetic.
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bp/rational.hpp"

namespace bp {

class Poly {
 public:
  /// The zero polynomial.
  Poly() = default;
  /// Constant polynomial.
  explicit Poly(const Rational& constant);

  /// Build from ascending coefficients; trailing zeros are stripped.
  static Poly from_coeffs(std::vector<Rational> coeffs);
  /// coeff * x^n (n >= 0).
  static Poly monomial(int n, const Rational& coeff = Rational(1));
  /// The identity polynomial x.
  static Poly x() { return monomial(1); }
  /// The constant polynomial 1.
  static Poly one() { return Poly(Rational(1)); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial (read as minus infinity).
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Leading coefficient; zero polynomial yields 0.
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& at) const;
  double eval_double(double at) const;

  Poly derivative() const;
  /// n-th derivative (n >= 0).
  Poly derivative(int n) const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;
  /// Scale so the leading coefficient is 1; zero stays zero.
  Poly monic() const;

  /// f(x + shift): change of variable, exact.
  Poly shifted(const Rational& shift) const;
  /// Multiply by x^n (n >= 0).
  Poly times_xpow(int n) const;
  /// Order of vanishing at the given point; -1 for the zero polynomial.
  int order_at(const Rational& point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder of a by b (b nonzero), over the rational field.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient; throws NonExactDivision when a is not a multiple of b.
  static Poly exact_div(const Poly& a, const Poly& b);

  /// Human-readable form, e.g. "x^2 - 2/15*x + 1/225".
  std::string str(std::string_view var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// p^n for n >= 0.
Poly poly_pow(const Poly& base, int n);

/// (x - root)^n for n >= 0.
Poly linear_power(const Rational& root, int n);

}  // namespace bp
