#include "doctest.h"

#include <vector>

#include "compsum/composition.hpp"

using namespace compsum;

namespace {

std::vector<std::vector<int>> collect(int n, int l) {
  std::vector<std::vector<int>> out;
  for_each_composition(n, l, [&](std::span<const int> p) {
    out.emplace_back(p.begin(), p.end());
  });
  return out;
}

}  // namespace

TEST_CASE("enumeration is lexicographic and complete") {
  const std::vector<std::vector<int>> want = {
      {1, 1, 3}, {1, 2, 2}, {1, 3, 1}, {2, 1, 2}, {2, 2, 1}, {3, 1, 1}};
  CHECK(collect(5, 3) == want);
  CHECK(collect(4, 1) == std::vector<std::vector<int>>{{4}});
  CHECK(collect(3, 3) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(collect(3, 4).empty());
  CHECK(collect(3, 0).empty());
}

TEST_CASE("enumeration count matches binomial(n-1, l-1)") {
  for (int n = 1; n <= 10; ++n) {
    Integer total = 0;
    for (int l = 1; l <= n; ++l) {
      const auto got = collect(n, l);
      CHECK(Integer(got.size()) == composition_count(n, l));
      for (const auto& parts : got) {
        int sum = 0;
        for (int x : parts) {
          CHECK(x >= 1);
          sum += x;
        }
        CHECK(sum == n);
      }
      total += composition_count(n, l);
    }
    CHECK(total == Integer(1) << (n - 1));  // 2^(n-1) compositions in all
  }
}

TEST_CASE("first-part partition covers the whole space") {
  const int n = 6, l = 3;
  std::vector<std::vector<int>> merged;
  for (int p1 = 1; p1 <= n; ++p1) {
    for_each_composition_with_first(n, l, p1, [&](std::span<const int> p) {
      merged.emplace_back(p.begin(), p.end());
    });
  }
  CHECK(merged == collect(n, l));
}

TEST_CASE("CompositionRange yields Composition values") {
  int count = 0;
  for (const Composition c : CompositionRange(5, 2)) {
    CHECK(c.total() == 5);
    CHECK(c.length() == 2);
    ++count;
  }
  CHECK(count == 4);
}

TEST_CASE("Composition validates parts") {
  CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({}), std::invalid_argument);
  const Composition c({1, 2, 1});
  CHECK(c.partial_sums() == std::vector<int>{1, 3, 4});
  CHECK(c.reversed() == Composition({1, 2, 1}));
  CHECK(Composition({2, 1}).reversed() == Composition({1, 2}));
}

TEST_CASE("left and right products") {
  const std::vector<int> p{1, 2, 1};  // s = (1, 3, 4)
  CHECK(left_product(p) == 12);
  CHECK(right_product(p) == 12);  // palindrome
  const std::vector<int> q{2, 1};  // s = (2, 3)
  CHECK(left_product(q) == 6);
  CHECK(right_product(q) == 3);  // L((1,2)) = 1*3
  const std::vector<int> single{7};
  CHECK(left_product(single) == 7);
  CHECK(right_product(single) == 7);
}

TEST_CASE("right product equals left product of the reversal") {
  for_each_composition(7, 3, [](std::span<const int> p) {
    std::vector<int> rev(p.rbegin(), p.rend());
    CHECK(right_product(p) == left_product(rev));
  });
}

TEST_CASE("elementary symmetric functions") {
  const std::vector<Rational> xs{1, 2, 3};
  CHECK(elementary_symmetric(xs, 0) == Rational(1));
  CHECK(elementary_symmetric(xs, 1) == Rational(6));
  CHECK(elementary_symmetric(xs, 2) == Rational(11));
  CHECK(elementary_symmetric(xs, 3) == Rational(6));
  CHECK(elementary_symmetric(xs, 4) == Rational(0));
  CHECK(elementary_symmetric({}, 0) == Rational(1));
  CHECK(elementary_symmetric({}, 1) == Rational(0));

  const std::vector<int> parts{1, 2, 3};
  const auto all = elementary_symmetric_all(parts);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == 1);
  CHECK(all[1] == 6);
  CHECK(all[2] == 11);
  CHECK(all[3] == 6);
}

TEST_CASE("e_k with rational arguments") {
  // e_1(1/2, 1/6) = 2/3, e_2 = 1/12: the eq1 right side at n = 3
  const std::vector<Rational> xs{Rational(1, 2), Rational(1, 6)};
  CHECK(elementary_symmetric(xs, 1) == Rational(2, 3));
  CHECK(elementary_symmetric(xs, 2) == Rational(1, 12));
}
