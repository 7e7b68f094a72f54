#include "bp/generalized_form.hpp"

#include <sstream>
#include <utility>

namespace bp {

std::string GeneralizedForm::str() const {
  std::ostringstream os;
  os << "x^(" << a.str() << ") * (x-1)^(" << b.str() << ") * (" << f.str() << ")";
  return os.str();
}

GeneralizedForm gf_from_poly(const Poly& f) { return GeneralizedForm{Rational(0), Rational(0), f}; }

GeneralizedForm gf_derivative(const GeneralizedForm& g) {
  static const Poly xm1 = Poly::from_coeffs({Rational(-1), Rational(1)});
  static const Poly x = Poly::x();
  Poly f = g.a * (xm1 * g.f) + g.b * (x * g.f) + (x * xm1) * g.f.derivative();
  return GeneralizedForm{g.a - Rational(1), g.b - Rational(1), std::move(f)};
}

GeneralizedForm gf_derivative_n(GeneralizedForm g, int n) {
  if (n < 0) raise(ErrorCode::InvalidInput, "negative derivative order");
  for (int i = 0; i < n; ++i) g = gf_derivative(g);
  return g;
}

GeneralizedForm gf_mul_xpow(GeneralizedForm g, const Rational& da) {
  g.a += da;
  return g;
}

GeneralizedForm gf_mul_x1pow(GeneralizedForm g, const Rational& db) {
  g.b += db;
  return g;
}

GeneralizedForm gf_mul_poly(GeneralizedForm g, const Poly& p) {
  g.f = g.f * p;
  return g;
}

GeneralizedForm gf_reduce(GeneralizedForm g) {
  if (g.f.is_zero()) return GeneralizedForm{Rational(0), Rational(0), Poly()};
  static const Poly x = Poly::x();
  static const Poly xm1 = Poly::from_coeffs({Rational(-1), Rational(1)});
  const int ord0 = g.f.order_at(Rational(0));
  if (ord0 > 0) {
    g.f = Poly::exact_div(g.f, poly_pow(x, ord0));
    g.a += Rational(ord0);
  }
  const int ord1 = g.f.order_at(Rational(1));
  if (ord1 > 0) {
    g.f = Poly::exact_div(g.f, poly_pow(xm1, ord1));
    g.b += Rational(ord1);
  }
  return g;
}

Poly gf_normalize(const GeneralizedForm& g) {
  GeneralizedForm red = gf_reduce(g);
  if (red.f.is_zero()) return Poly();
  const bool a_ok = red.a.is_integer() && !red.a.is_negative();
  const bool b_ok = red.b.is_integer() && !red.b.is_negative();
  if (!a_ok || !b_ok)
    raise(ErrorCode::NotPolynomial,
          "generalized form does not expand to a polynomial: " + red.str());
  static const Poly xm1 = Poly::from_coeffs({Rational(-1), Rational(1)});
  Poly out = red.f.times_xpow(static_cast<int>(red.a.to_long()));
  return out * poly_pow(xm1, static_cast<int>(red.b.to_long()));
}

}  // namespace bp
