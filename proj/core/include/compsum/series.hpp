#ifndef COMPSUM_SERIES_HPP
#define COMPSUM_SERIES_HPP

#include <vector>

#include "compsum/rational.hpp"

namespace compsum {

// Truncated formal power series in z over Rational: coefficients 0..order
// are exact, everything beyond z^order is discarded, never approximated.
// Mixing two orders aligns down to the smaller one.
class Series {
 public:
  explicit Series(int order);  // zero series of the given order
  explicit Series(std::vector<Rational> coeffs);  // order = size - 1

  static Series one(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  // Exact Cauchy product truncated at min(order, o.order).
  friend Series operator*(const Series& a, const Series& b);

  Series scaled(const Rational& c) const;
  friend Series operator*(const Series& a, const Rational& c) { return a.scaled(c); }
  friend Series operator*(const Rational& c, const Series& a) { return a.scaled(c); }

  // d/dz: sum c_n z^n -> sum n c_n z^(n-1); order drops by one.
  Series derivative() const;

  // Multiplication by z^k; the known coefficients shift up, order grows by k.
  Series shifted(int k) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> c_;
};

}  // namespace compsum

#endif
