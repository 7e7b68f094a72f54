#include "bp/rational.hpp"

#include <cctype>
#include <ostream>

namespace bp {

Rational::Rational(long num, long den) {
  if (den == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  auto bad = [&]() -> Rational {
    raise(ErrorCode::InvalidInput, "cannot parse rational from '" + std::string(text) + "'");
  };
  if (text.empty()) return bad();
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  auto is_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num, true) || !is_int(den, true)) return bad();
  mpz_class n(num), d(den);
  if (d == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator: '" + std::string(text) + "'");
  mpq_class q(n);
  q /= mpq_class(d);
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
  mpq_class q(num);
  q /= mpq_class(den);
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer()) raise(ErrorCode::InvalidInput, "rational " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p())
    raise(ErrorCode::InvalidInput, "integer " + str() + " does not fit in a machine word");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(long n) {
  if (n < 0) raise(ErrorCode::InvalidInput, "factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(const Rational& x, long j) {
  if (j < 0) raise(ErrorCode::InvalidInput, "binomial with negative lower index");
  Rational acc(1);
  for (long i = 0; i < j; ++i) acc *= (x - Rational(i));
  return acc / factorial(j);
}

}  // namespace bp
