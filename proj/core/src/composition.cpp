#include "compsum/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace compsum {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("Composition: needs at least one part");
  }
  total_ = 0;
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
    total_ += p;
  }
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> s(parts_.size());
  std::partial_sum(parts_.begin(), parts_.end(), s.begin());
  return s;
}

Composition Composition::reversed() const {
  std::vector<int> rev(parts_.rbegin(), parts_.rend());
  return Composition(std::move(rev));
}

CompositionRange::iterator::iterator(int n, int l) {
  if (l < 1 || l > n) return;
  parts_.assign(static_cast<std::size_t>(l), 1);
  parts_[l - 1] = n - l + 1;
  done_ = false;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  if (!done_ && !next_composition(parts_)) done_ = true;
  return *this;
}

Integer composition_count(int n, int l) {
  if (l < 1 || l > n) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - 1),
               static_cast<unsigned long>(l - 1));
  return c;
}

Integer left_product(std::span<const int> parts) {
  Integer acc = 1;
  long s = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    s += parts[i];
    acc *= s;
  }
  s += parts.empty() ? 0 : parts.back();
  acc *= s;  // final factor is n itself (covers the single-part case)
  return acc;
}

Integer left_product(const Composition& p) {
  return left_product(std::span<const int>(p.parts()));
}

Integer right_product(std::span<const int> parts) {
  Integer acc = 1;
  long s = 0;
  for (std::size_t i = parts.size(); i-- > 1;) {
    s += parts[i];
    acc *= s;
  }
  s += parts.empty() ? 0 : parts.front();
  acc *= s;
  return acc;
}

Integer right_product(const Composition& p) {
  return right_product(std::span<const int>(p.parts()));
}

Rational elementary_symmetric(std::span<const Rational> values, int k) {
  if (k < 0) throw std::invalid_argument("elementary_symmetric: k < 0");
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1);
  e[0] = 1;
  int seen = 0;
  for (const Rational& x : values) {
    ++seen;
    for (int j = std::min(seen, k); j >= 1; --j) {
      e[j] += x * e[j - 1];
    }
  }
  return e[k];
}

std::vector<Integer> elementary_symmetric_all(std::span<const int> values) {
  const int len = static_cast<int>(values.size());
  std::vector<Integer> e(static_cast<std::size_t>(len) + 1);
  e[0] = 1;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j >= 1; --j) {
      e[j] += values[i] * e[j - 1];
    }
  }
  return e;
}

}  // namespace compsum
