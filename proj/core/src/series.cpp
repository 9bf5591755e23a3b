#include "compsum/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace compsum {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
}

Series Series::one(int order) {
  Series s(order);
  s.c_[0] = 1;
  return s;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Series& Series::operator+=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series prod(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      prod.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return prod;
}

Series Series::scaled(const Rational& c) const {
  Series s(order());
  for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * c;
  return s;
}

Series Series::derivative() const {
  if (order() < 1) {
    throw std::invalid_argument("Series::derivative: order 0 series");
  }
  Series d(order() - 1);
  for (int k = 1; k <= order(); ++k) d.c_[k - 1] = Rational(k) * c_[k];
  return d;
}

Series Series::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Series::shifted: negative shift");
  Series s(order() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i + k] = c_[i];
  return s;
}

}  // namespace compsum
