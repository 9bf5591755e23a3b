#include "compsum/identities.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compsum/composition.hpp"
#include "compsum/composition_sums.hpp"

namespace compsum {

namespace {

void require_n_l(int n, int l) {
  if (n < 1 || l < 1 || l > n) {
    throw std::invalid_argument("identity check needs 1 <= l <= n, got n=" +
                                std::to_string(n) + " l=" + std::to_string(l));
  }
}

// sum over l-compositions of n of weight(parts) / (L(p) R(p)).
template <class Weight>
Rational enumerate_lr_sum(int n, int l, Weight&& weight) {
  Rational acc = 0;
  for_each_composition(n, l, [&](std::span<const int> p) {
    acc += Rational(weight(p), left_product(p) * right_product(p));
  });
  return acc;
}

Integer part_product(std::span<const int> p) {
  Integer prod = 1;
  for (int x : p) prod *= x;
  return prod;
}

Integer shifted_part_product(std::span<const int> p) {
  Integer prod = 1;
  for (int x : p) prod *= x - 1;
  return prod;
}

IdentityReport make_report(IdentityKind kind, int n, int l, Rational lhs,
                           Rational rhs) {
  const bool pass = lhs == rhs;
  return {kind, n, l, std::move(lhs), std::move(rhs), pass};
}

}  // namespace

std::string_view identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::eq1: return "eq1";
    case IdentityKind::eq2: return "eq2";
    case IdentityKind::pn0v: return "pn0v";
    case IdentityKind::alternating_sum: return "alternating_sum";
    case IdentityKind::pn_u0_product: return "pn_u0_product";
    case IdentityKind::qr_sum: return "qr_sum";
  }
  throw std::invalid_argument("identity_name: unknown kind");
}

IdentityReport identity_eq1(int n, int l) {
  require_n_l(n, l);
  const Rational lhs = enumerate_lr_sum(n, l, part_product);
  std::vector<Rational> args;
  args.reserve(static_cast<std::size_t>(n - 1));
  for (long i = 1; i < n; ++i) args.emplace_back(1, i * (i + 1));
  const Rational rhs = Rational(1, n) * elementary_symmetric(args, l - 1);
  return make_report(IdentityKind::eq1, n, l, lhs, rhs);
}

IdentityReport identity_eq2(int n, int l) {
  require_n_l(n, l);
  const Rational lhs = enumerate_lr_sum(n, l, shifted_part_product);
  const long m = n / 2;
  const auto q = [n](long i) { return i * (n - i); };
  std::vector<Rational> args;
  for (long i = 1; i < m; ++i) {
    const long r = (n - 1 - 2 * i) * (n - 1 - 2 * i);
    args.emplace_back(r, q(i) * q(i + 1));
  }
  const Rational rhs = Rational(n - 1, static_cast<long>(n) * n) *
                       elementary_symmetric(args, l - 1);
  return make_report(IdentityKind::eq2, n, l, lhs, rhs);
}

IdentityReport identity_pn0v(int n, int l) {
  require_n_l(n, l);
  const Rational lhs =
      enumerate_lr_sum(n, l, [](std::span<const int>) { return Integer(1); });
  std::vector<Rational> args;
  args.reserve(static_cast<std::size_t>(n - 1));
  for (long i = 1; i < n; ++i) args.emplace_back(1, i * (n - i));
  const Rational rhs =
      Rational(1, static_cast<long>(n) * n) * elementary_symmetric(args, l - 1);
  return make_report(IdentityKind::pn0v, n, l, lhs, rhs);
}

IdentityReport identity_alternating_sum(int n, int l) {
  require_n_l(n, l);
  const Rational lhs = enumerate_lr_sum(n, l, shifted_part_product);
  Rational rhs = 0;
  for (int k = 0; k <= l; ++k) {
    const Rational s = composition_sum(k, l, n);
    rhs += ((l - k) % 2 == 0) ? s : -s;
  }
  return make_report(IdentityKind::alternating_sum, n, l, lhs, rhs);
}

BiPoly pn_u0_product(int n) {
  if (n < 1) throw std::invalid_argument("pn_u0_product: n must be >= 1");
  BiPoly prod = BiPoly::monomial(Rational(1, n), 1, 0);
  for (long i = 1; i < n; ++i) {
    prod = prod * BiPoly::linear(Rational(1, i * (i + 1)), 0, 1);
  }
  return prod;
}

bool qr_sum_identity(int n) {
  if (n < 2) throw std::invalid_argument("qr_sum_identity: n must be >= 2");
  for (long i = 0; i < n / 2; ++i) {
    const long q_i = i * (n - i);
    const long q_next = (i + 1) * (n - i - 1);
    const long r_i = (n - 1 - 2 * i) * (n - 1 - 2 * i);
    if (q_i + q_next + r_i != i * (i + 1) + (n - i - 1) * (n - i)) return false;
  }
  return true;
}

}  // namespace compsum
