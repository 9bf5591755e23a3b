#ifndef COMPSUM_IDENTITIES_HPP
#define COMPSUM_IDENTITIES_HPP

#include <string_view>

#include "compsum/bipoly.hpp"
#include "compsum/rational.hpp"

namespace compsum {

enum class IdentityKind { eq1, eq2, pn0v, alternating_sum, pn_u0_product, qr_sum };

std::string_view identity_name(IdentityKind kind);

// Both sides of one identity instance, computed independently.
// pass <=> lhs == rhs exactly.
struct IdentityReport {
  IdentityKind identity;
  int n = 0;
  int l = 0;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

// sum p_1...p_l / (L(p) R(p))  =  (1/n) e_{l-1}(1/(1*2), ..., 1/((n-1)n)).
// The left side is enumerated directly, never read off a P_n route.
IdentityReport identity_eq1(int n, int l);

// sum (p_1-1)...(p_l-1) / (L(p) R(p))
//   =  ((n-1)/n^2) e_{l-1}(r_1/(q_1 q_2), ..., r_{m-1}/(q_{m-1} q_m)),
// m = floor(n/2). The argument list is empty for n <= 3.
IdentityReport identity_eq2(int n, int l);

// sum 1/(L(p) R(p))  =  (1/n^2) e_{l-1}(1/q_1, ..., 1/q_{n-1}).
IdentityReport identity_pn0v(int n, int l);

// sum (p_1-1)...(p_l-1) / (L(p) R(p))  =  sum_k (-1)^{l-k} S(k,l,n),
// i.e. the coefficient of u^l in P_n(u,-u).
IdentityReport identity_alternating_sum(int n, int l);

// P_n(u,0) = (u/n) prod_{i=1}^{n-1} (u/(i(i+1)) + 1), expanded.
BiPoly pn_u0_product(int n);

// q_i + q_{i+1} + r_i = i(i+1) + (n-i-1)(n-i) for all 0 <= i < floor(n/2).
bool qr_sum_identity(int n);

}  // namespace compsum

#endif
