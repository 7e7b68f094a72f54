#include "bp/operators.hpp"

namespace bp {

namespace {

const Poly& poly_x() {
  static const Poly x = Poly::x();
  return x;
}

const Poly& poly_xm1() {
  static const Poly xm1 = Poly::from_coeffs({Rational(-1), Rational(1)});
  return xm1;
}

const Poly& poly_xxm1() {
  static const Poly xxm1 = poly_x() * poly_xm1();
  return xxm1;
}

void check_op_index(const Params& pr, int i) {
  if (i < 0 || i > pr.r) raise(ErrorCode::IndexOutOfRange, "ladder operator index out of range");
}

}  // namespace

Poly FirstOrderOp::apply(const Poly& f) const { return p * f.derivative() + q * f; }

GeneralizedForm FirstOrderOp::apply(const GeneralizedForm& g) const {
  // p g' has exponents (a-1, b-1); rewrite q g over the same exponents as
  // x^{a-1}(x-1)^{b-1} * (q x (x-1) f).
  GeneralizedForm d = gf_derivative(g);
  d.f = p * d.f + q * (poly_xxm1() * g.f);
  return gf_reduce(d);
}

FirstOrderOp op_D(const Params& pr, int i) {
  check_op_index(pr, i);
  const Rational e = e_V(pr, i);
  // x(x-1) d/dx - e_i (x-1) - (k+1)
  Poly q = Poly::from_coeffs({e - pr.k - Rational(1), -e});
  return FirstOrderOp{poly_xxm1(), std::move(q)};
}

FirstOrderOp op_Dvee(const Params& pr, int i) {
  check_op_index(pr, i);
  // x d/dx - e^vee_{r-i}
  return FirstOrderOp{poly_x(), Poly(-e_U(pr, pr.r - i))};
}

Poly conjugated_ladder_apply(const Params& pr, int i, const Rational& S, const Poly& f) {
  check_op_index(pr, i);
  const Rational e = e_V(pr, i);
  Poly q = Poly::from_coeffs({e - S - pr.k - Rational(1), S - e});
  return poly_xxm1() * f.derivative() + q * f;
}

Poly SecondOrderOp::apply(const Poly& f) const {
  return c2 * f.derivative(2) + c1 * f.derivative() + c0 * f;
}

SecondOrderOp compose(const FirstOrderOp& a, const FirstOrderOp& b) {
  SecondOrderOp out;
  out.c2 = a.p * b.p;
  out.c1 = a.p * (b.p.derivative() + b.q) + a.q * b.p;
  out.c0 = a.p * b.q.derivative() + a.q * b.q;
  return out;
}

Poly OdeOperator::apply_cleared(const Poly& f) const {
  Poly out;
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    GeneralizedForm term = gf_mul_poly(coeff[j], f.derivative(static_cast<int>(j)));
    term = gf_mul_xpow(std::move(term), Rational(1));
    term = gf_mul_x1pow(std::move(term), Rational(1));
    out = out + gf_normalize(term);
  }
  return out;
}

namespace {

OdeOperator ode_rank1(const Params& pr) {
  const Rational m = pr.m_at(1), k = pr.k, l = pr.l_at(1);
  OdeOperator D;
  D.coeff.resize(3);
  // constant term l(k+m+1-l)
  D.coeff[0] = gf_from_poly(Poly(l * (k + m + Rational(1) - l)));
  // -(k x + m(x-1)) = -(k+m) x + m
  D.coeff[1] = gf_from_poly(Poly::from_coeffs({m, -(k + m)}));
  // x(x-1)
  D.coeff[2] = GeneralizedForm{Rational(1), Rational(1), Poly::one()};
  return D;
}

OdeOperator ode_rank2_V(const Params& pr) {
  const Rational m1 = pr.m_at(1), m2 = pr.m_at(2), k = pr.k;
  const Rational l1 = pr.l_at(1), l2 = pr.l_at(2);
  const Rational one(1), two(2);

  OdeOperator D;
  D.coeff.resize(4);
  D.coeff[3] = GeneralizedForm{one, one, Poly::one()};
  // -((2 m1 + m2)(x-1) + 2 k x)
  D.coeff[2] =
      gf_from_poly(Poly::from_coeffs({two * m1 + m2, -(two * m1 + m2 + two * k)}));
  // v1 = c + a/x + b/(x-1), stored as (c x(x-1) + a(x-1) + b x) / (x(x-1))
  const Rational c = -l2 * l2 + l2 * (m2 + one) + l1 * (k + m1 + one - l1 + l2) +
                     (m1 + k) * (m1 + m2 + k + one);
  const Rational a = -m1 * (m1 + m2 + one);
  const Rational b = k * (k + one);
  Poly v1 = c * poly_x() * poly_xm1() + a * poly_xm1() + b * poly_x();
  D.coeff[1] = GeneralizedForm{-one, -one, std::move(v1)};
  // v0 = A/(x(x-1)) + B/x, stored as (A + B(x-1)) / (x(x-1))
  const Rational A =
      -(k + one) * (-l2 * l2 + l2 * (m2 + one) + l1 * (m1 + k + one - l1 + l2));
  const Rational B = -l1 * (l2 - l1 + m1 + k + one) * (m1 + m2 + k + two - l2);
  Poly v0 = Poly(A) + B * poly_xm1();
  D.coeff[0] = GeneralizedForm{-one, -one, std::move(v0)};
  return D;
}

OdeOperator ode_rank2_U(const Params& pr) {
  const Rational m1 = pr.m_at(1), m2 = pr.m_at(2), k = pr.k;
  const Rational l1 = pr.l_at(1), l2 = pr.l_at(2);
  const Rational one(1), two(2);

  OdeOperator D;
  D.coeff.resize(4);
  D.coeff[3] = GeneralizedForm{one, one, Poly::one()};
  // -((2 m2 + m1)(x-1) + k x)
  D.coeff[2] = gf_from_poly(Poly::from_coeffs({two * m2 + m1, -(two * m2 + m1 + k)}));
  // u1 = c + a/x, stored as (c x + a) / x.  The constant part equals the
  // second elementary symmetric function of the dual degree sequence minus
  // (2 + 2 m2 + m1 + k), as dictated by the indicial polynomial at infinity.
  const Rational c = l2 * (l1 - l2 + m2 + one) + (l1 + m2 + one) * (m2 + m1 + k + two - l1) -
                     two - two * m2 - m1 - k;
  const Rational a = -m2 * (m1 + m2 + one);
  D.coeff[1] = GeneralizedForm{-one, Rational(0), Poly::from_coeffs({a, c})};
  // u0 = B/x
  const Rational B = l2 * (l1 - l2 + m2 + one) * (l1 - m2 - m1 - k - two);
  D.coeff[0] = GeneralizedForm{-one, Rational(0), Poly(B)};
  return D;
}

}  // namespace

OdeOperator ode_operator(const Params& pr, SpaceKind kind) {
  if (pr.r == 1) return ode_rank1(pr);
  if (pr.r == 2) return kind == SpaceKind::V ? ode_rank2_V(pr) : ode_rank2_U(pr);
  raise(ErrorCode::UnsupportedRank, "closed-form ODE operators exist only for ranks 1 and 2");
}

}  // namespace bp
