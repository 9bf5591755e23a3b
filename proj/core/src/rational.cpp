#include "compsum/rational.hpp"

#include <ostream>

namespace compsum {

namespace {

void canonicalize_checked(mpq_class& q) {
  if (sgn(q.get_den()) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  q.canonicalize();
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  canonicalize_checked(q_);
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  canonicalize_checked(q_);
}

Rational Rational::parse(std::string_view s) {
  Rational r;
  try {
    r.q_ = mpq_class(std::string(s), 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: not a rational: '" +
                                std::string(s) + "'");
  }
  canonicalize_checked(r.q_);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("Rational: inverse of zero");
  }
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational pochhammer(const Rational& x, unsigned long n) {
  Rational acc = 1;
  Rational term = x;
  for (unsigned long k = 0; k < n; ++k) {
    acc *= term;
    term += 1;
  }
  return acc;
}

Rational general_binomial(const Rational& e, unsigned long n) {
  Rational acc = 1;
  for (unsigned long k = 1; k <= n; ++k) {
    acc *= (e - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
  }
  return acc;
}

}  // namespace compsum
