#include "bk/rational.hpp"

#include <limits>
#include <ostream>

#include "bk/errors.hpp"

namespace bk {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InvalidInput("rational with zero denominator");
  q.canonicalize();
  Rational r;
  r.value_ = q;
  return r;
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw InvariantViolation("expected an integer, got " + str());
  return value_.get_num();
}

bool Rational::fits_int64() const {
  return is_integer() && value_.get_num().fits_slong_p() &&
         std::numeric_limits<long>::digits == std::numeric_limits<std::int64_t>::digits;
}

std::int64_t Rational::to_int64() const {
  if (!fits_int64()) throw InvariantViolation("value does not fit in 64 bits: " + str());
  return value_.get_num().get_si();
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
  if (rhs.is_zero()) throw InvalidInput("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
  return r;
}

}  // namespace bk
