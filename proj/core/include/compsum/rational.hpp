#ifndef COMPSUM_RATIONAL_HPP
#define COMPSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace compsum {

// Arbitrary-precision signed integer.
using Integer = mpz_class;

// Thrown when a parameter hits a pole of a defining recurrence (gamma an
// integer in 1..N, or a zero Pochhammer symbol in a series denominator).
// Distinct from a failed identity check: "invalid input", not "wrong answer".
class inadmissible_parameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact rational scalar over GMP. Invariants: gcd(|num|, den) = 1 and
// den > 0 after every operation; zero is 0/1. No rounding anywhere.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  // Accepts "p/q" or "p" (optionally signed), reduces to canonical form.
  // Throws std::invalid_argument on garbage, std::domain_error on q = 0.
  static Rational parse(std::string_view s);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // "p/q" in lowest terms with q > 0, or just "p" when q = 1.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const;
  Rational inverse() const;  // throws std::domain_error on zero

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  // Exact comparison (GMP cross-multiplies internally).
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c <=> 0;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n! as an exact integer.
Integer factorial(unsigned long n);

// Rising factorial x(x+1)...(x+n-1); empty product is 1.
Rational pochhammer(const Rational& x, unsigned long n);

// Generalized binomial coefficient e(e-1)...(e-n+1)/n!; 1 for n = 0.
Rational general_binomial(const Rational& e, unsigned long n);

}  // namespace compsum

#endif
