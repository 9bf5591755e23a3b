#ifndef COMPSUM_COMPOSITION_HPP
#define COMPSUM_COMPOSITION_HPP

#include <span>
#include <utility>
#include <vector>

#include "compsum/rational.hpp"

namespace compsum {

// Ordered list of positive parts; an l-composition of n = sum of the parts.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  const std::vector<int>& parts() const { return parts_; }

  // Left partial sums (s_1, ..., s_l); strictly increasing, ends at total().
  std::vector<int> partial_sums() const;

  Composition reversed() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_;
};

// Advances parts to the lexicographically next composition of the same total
// and length, in place. Returns false if parts was already the last one.
inline bool next_composition(std::span<int> parts) {
  const int l = static_cast<int>(parts.size());
  if (l <= 1) return false;
  // Rightmost position whose strict suffix still has a part > 1 to give up.
  int suffix_sum = parts[l - 1];
  int j = l - 2;
  while (j >= 0 && suffix_sum == l - 1 - j) {
    suffix_sum += parts[j];
    --j;
  }
  if (j < 0) return false;
  ++parts[j];
  for (int t = j + 1; t < l - 1; ++t) parts[t] = 1;
  parts[l - 1] = suffix_sum - 1 - (l - 2 - j);
  return true;
}

// Streams all l-compositions of n in lexicographic part order through f,
// constant memory. Exactly binomial(n-1, l-1) items; empty for l < 1 or l > n.
template <class F>
void for_each_composition(int n, int l, F&& f) {
  if (l < 1 || l > n) return;
  std::vector<int> p(static_cast<std::size_t>(l), 1);
  p[l - 1] = n - l + 1;
  do {
    f(std::span<const int>(p));
  } while (next_composition(p));
}

// Same stream restricted to compositions with first part p1. Used to
// partition the composition space across workers.
template <class F>
void for_each_composition_with_first(int n, int l, int p1, F&& f) {
  if (l < 1 || p1 < 1 || p1 > n) return;
  if (l == 1) {
    if (p1 == n) {
      std::vector<int> p{n};
      f(std::span<const int>(p));
    }
    return;
  }
  if (n - p1 < l - 1) return;
  std::vector<int> p(static_cast<std::size_t>(l), 1);
  p[0] = p1;
  p[l - 1] = n - p1 - (l - 2);
  do {
    f(std::span<const int>(p));
  } while (next_composition(std::span<int>(p).subspan(1)));
}

// Lexicographically ordered stream of l-compositions of n as a range.
// Single-pass input range; empty when l < 1 or l > n.
class CompositionRange {
 public:
  CompositionRange(int n, int l) : n_(n), l_(l) {}

  struct sentinel {};

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, int l);

    Composition operator*() const { return Composition(parts_); }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, sentinel) { return it.done_; }

   private:
    std::vector<int> parts_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, l_); }
  sentinel end() const { return {}; }

 private:
  int n_;
  int l_;
};

// Number of l-compositions of n: binomial(n-1, l-1); 0 outside 1 <= l <= n.
Integer composition_count(int n, int l);

// L(p) = s_1 s_2 ... s_{l-1} n, the product of the left partial sums.
Integer left_product(std::span<const int> parts);
Integer left_product(const Composition& p);

// R(p) = L(reverse(p)): p_l (p_{l-1}+p_l) ... (p_2+...+p_l) n.
Integer right_product(std::span<const int> parts);
Integer right_product(const Composition& p);

// Elementary symmetric function e_k of the values: the coefficient of
// X^(len-k) in prod (X + x_i). e_0 = 1 (empty product), e_k = 0 for
// k > len. One-pass incremental recurrence, exact.
Rational elementary_symmetric(std::span<const Rational> values, int k);

// All of e_0..e_len at once for integer arguments (exact, used by the
// enumeration routes where the arguments are composition parts).
std::vector<Integer> elementary_symmetric_all(std::span<const int> values);

}  // namespace compsum

#endif
