#ifndef COMPSUM_HYPERGEOMETRIC_HPP
#define COMPSUM_HYPERGEOMETRIC_HPP

#include <optional>

#include "compsum/rational.hpp"
#include "compsum/series.hpp"

namespace compsum {

struct HypergeometricParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  friend bool operator==(const HypergeometricParams&,
                         const HypergeometricParams&) = default;
};

// The parameter map that carries F(alpha, beta, 1-gamma; z) over to the
// composition-sum series:
//   u_hat = (1/4)(alpha+beta+gamma)(2-alpha-beta-gamma)
//   v_hat = (1/4)(alpha-beta-gamma)(alpha-beta+gamma)
struct GaugeParams {
  Rational u_hat;
  Rational v_hat;
  friend bool operator==(const GaugeParams&, const GaugeParams&) = default;
};

GaugeParams gauge_params(const HypergeometricParams& p);

// gamma must avoid the integer poles 1..order of the f recurrence; the same
// condition keeps (1-gamma)_n nonzero for n <= order.
bool gamma_admissible(const Rational& gamma, int order);

// Lower-parameter condition for F(a, b, c; z): (c)_n != 0 for n <= order,
// i.e. c is not in {0, -1, ..., -(order-1)}.
bool lower_parameter_admissible(const Rational& c, int order);

// F(a, b, c; z) = sum (a)_n (b)_n / (n! (c)_n) z^n, truncated exactly.
// Throws inadmissible_parameter when (c)_n vanishes for some n <= order.
Series hypergeometric_series(const Rational& a, const Rational& b,
                             const Rational& c, int order);

// (1-z)^e = sum (-1)^n binom(e, n) z^n, truncated exactly.
Series binomial_series(const Rational& e, int order);

// Coefficients of the series f with f_0 = 1 and
//   i (gamma - i) f_i = sum_{j<i} ((i-j)u + v) f_j,
// evaluated at rational u, v. Throws inadmissible_parameter when gamma is
// an integer in 1..order.
Series f_series(const Rational& u, const Rational& v, const Rational& gamma,
                int order);

// Substitutes f_series into z^2 f'' + (1-gamma) z f' +
// (v z/(1-z) + u z/(1-z)^2) f, expanding z/(1-z) = sum_{n>0} z^n and
// z/(1-z)^2 = sum_{n>0} n z^n as truncated series. Must be identically
// zero through the given order; exercises series multiplication instead of
// the recurrence's index algebra.
Series ode_residual(const Rational& u, const Rational& v, const Rational& gamma,
                    int order);

struct GaugeCheckReport {
  HypergeometricParams params;
  GaugeParams gauge;
  int order = 0;
  bool pass = false;
  std::optional<int> first_mismatch;
  Series f;        // left side: the recurrence route at (u_hat, v_hat, gamma)
  Series product;  // right side: (1-z)^((a+b+g)/2) * F(a, b, 1-g; z)
};

// Checks f(u_hat, v_hat, gamma; z) = (1-z)^((alpha+beta+gamma)/2)
// F(alpha, beta, 1-gamma; z) coefficientwise through the given order.
// The two sides come from independent code paths. Throws
// inadmissible_parameter (never a false verdict) on invalid parameters.
GaugeCheckReport verify_gauge_identity(const HypergeometricParams& p, int order);

// The factor identities that close the factorization proof, with gamma
// fixed to n (they fail for generic gamma; the residue argument lives at
// gamma = n). Checks, for q_i = i(n-i), r_i = (n-1-2i)^2, s = u_hat+v_hat:
//   (s+q_i)(s+q_{i+1}) + r_i u_hat = (alpha+i)(beta+i)(alpha+n-1-i)(beta+n-1-i)
// for 0 <= i < n/2, and for odd n = 2m+1 additionally
//   s + q_m = -(alpha+m)(beta+m).
bool factor_identity_check(const Rational& alpha, const Rational& beta, int n);

}  // namespace compsum

#endif
