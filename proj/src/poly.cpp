#include "bp/poly.hpp"

#include <sstream>

namespace bp {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

Poly Poly::monomial(int n, const Rational& coeff) {
  if (n < 0) raise(ErrorCode::InvalidInput, "monomial with negative exponent");
  if (coeff.is_zero()) return Poly();
  Poly p;
  p.c_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  p.c_.back() = coeff;
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double Poly::eval_double(double at) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return from_coeffs(std::move(d));
}

Poly Poly::derivative(int n) const {
  if (n < 0) raise(ErrorCode::InvalidInput, "negative derivative order");
  Poly p = *this;
  for (int i = 0; i < n && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

Poly Poly::antiderivative() const {
  if (is_zero()) return Poly();
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    a[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
  return from_coeffs(std::move(a));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return leading().inverse() * (*this);
}

Poly Poly::shifted(const Rational& shift) const {
  if (c_.size() <= 1 || shift.is_zero()) return *this;
  std::vector<Rational> b = c_;
  const int n = degree();
  for (int j = 0; j <= n; ++j)
    for (int i = n - 1; i >= j; --i)
      b[static_cast<std::size_t>(i)] += shift * b[static_cast<std::size_t>(i) + 1];
  return from_coeffs(std::move(b));
}

Poly Poly::times_xpow(int n) const {
  if (n < 0) raise(ErrorCode::InvalidInput, "negative power of x");
  if (is_zero() || n == 0) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
  out.insert(out.end(), c_.begin(), c_.end());
  return from_coeffs(std::move(out));
}

int Poly::order_at(const Rational& point) const {
  if (is_zero()) return -1;
  const Poly g = point.is_zero() ? *this : shifted(point);
  int ord = 0;
  while (g.coeff(ord).is_zero()) ++ord;
  return ord;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly::from_coeffs(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  Poly out = p;
  for (auto& c : out.c_) c *= s;
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational lead_inv = b.leading().inverse();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational q = rem[static_cast<std::size_t>(i + b.degree())] * lead_inv;
    quo[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(i + j)] -= q * b.c_[static_cast<std::size_t>(j)];
  }
  return {from_coeffs(std::move(quo)), from_coeffs(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    raise(ErrorCode::NonExactDivision,
          "(" + a.str() + ") is not divisible by (" + b.str() + ")");
  return q;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (i == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly poly_pow(const Poly& base, int n) {
  if (n < 0) raise(ErrorCode::InvalidInput, "negative polynomial power");
  Poly acc = Poly::one();
  Poly sq = base;
  int e = n;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

Poly linear_power(const Rational& root, int n) {
  return poly_pow(Poly::from_coeffs({-root, Rational(1)}), n);
}

}  // namespace bp
