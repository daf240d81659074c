#include "pizza/rational.hpp"

#include <cmath>
#include <ostream>

#include "pizza/error.hpp"

namespace pizza {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error("Rational: zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw Error("Rational::from_double: non-finite value");
  return Rational(mpq_class(x));
}

Rational Rational::pow2(long exponent) {
  mpz_class p;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  if (exponent >= 0) return Rational(p);
  return Rational(mpq_class(mpz_class(1), p));
}

Rational Rational::abs() const {
  Rational r = *this;
  mpq_abs(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  mpq_neg(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace pizza
