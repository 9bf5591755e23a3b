#include "compsum/hypergeometric.hpp"

#include <stdexcept>
#include <vector>

namespace compsum {

GaugeParams gauge_params(const HypergeometricParams& p) {
  const Rational s = p.alpha + p.beta + p.gamma;
  const Rational d = p.alpha - p.beta;
  const Rational quarter(1, 4);
  return {quarter * s * (Rational(2) - s),
          quarter * (d - p.gamma) * (d + p.gamma)};
}

bool gamma_admissible(const Rational& gamma, int order) {
  return !(gamma.is_integer() && gamma.sign() > 0 && gamma <= Rational(order));
}

bool lower_parameter_admissible(const Rational& c, int order) {
  if (!c.is_integer()) return true;
  return !(c.sign() <= 0 && -c < Rational(order));
}

Series hypergeometric_series(const Rational& a, const Rational& b,
                             const Rational& c, int order) {
  if (!lower_parameter_admissible(c, order)) {
    throw inadmissible_parameter("hypergeometric series: (c)_n = 0 for c = " +
                                 c.str() + " within order " +
                                 std::to_string(order));
  }
  Series s(order);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  Rational term = 1;
  coeffs[0] = term;
  for (int k = 0; k < order; ++k) {
    const Rational kk(k);
    term *= (a + kk) * (b + kk) / ((kk + 1) * (c + kk));
    coeffs[k + 1] = term;
  }
  return Series(std::move(coeffs));
}

Series binomial_series(const Rational& e, int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  Rational binom = 1;
  coeffs[0] = 1;
  for (int k = 1; k <= order; ++k) {
    binom *= (e - Rational(k - 1)) / Rational(k);
    coeffs[k] = (k % 2 == 0) ? binom : -binom;
  }
  return Series(std::move(coeffs));
}

Series f_series(const Rational& u, const Rational& v, const Rational& gamma,
                int order) {
  if (!gamma_admissible(gamma, order)) {
    throw inadmissible_parameter(
        "f series: gamma = " + gamma.str() +
        " is an integer pole of the recurrence within order " +
        std::to_string(order));
  }
  std::vector<Rational> f(static_cast<std::size_t>(order) + 1);
  f[0] = 1;
  for (int i = 1; i <= order; ++i) {
    Rational acc = 0;
    for (int j = 0; j < i; ++j) {
      acc += (Rational(i - j) * u + v) * f[j];
    }
    f[i] = acc / (Rational(i) * (gamma - Rational(i)));
  }
  return Series(std::move(f));
}

Series ode_residual(const Rational& u, const Rational& v, const Rational& gamma,
                    int order) {
  const Series f = f_series(u, v, gamma, order);

  // z/(1-z) = z + z^2 + ... and z/(1-z)^2 = z + 2z^2 + 3z^3 + ...
  std::vector<Rational> g1(static_cast<std::size_t>(order) + 1);
  std::vector<Rational> g2(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    g1[k] = 1;
    g2[k] = k;
  }
  Series residual = (Series(std::move(g1)).scaled(v) +
                     Series(std::move(g2)).scaled(u)) *
                    f;
  // z f' and z^2 f'' keep exactness through the full order: the shift adds
  // back what the derivative consumed.
  if (order >= 1) {
    residual += f.derivative().shifted(1).scaled(Rational(1) - gamma);
  }
  if (order >= 2) {
    residual += f.derivative().derivative().shifted(2);
  }
  return residual;
}

GaugeCheckReport verify_gauge_identity(const HypergeometricParams& p, int order) {
  // One condition covers both sides: gamma not an integer in 1..order keeps
  // the f recurrence pole-free and (1-gamma)_n nonzero.
  if (!gamma_admissible(p.gamma, order)) {
    throw inadmissible_parameter(
        "gauge identity: gamma = " + p.gamma.str() +
        " is inadmissible at order " + std::to_string(order) +
        " (integer pole / zero Pochhammer)");
  }
  const GaugeParams g = gauge_params(p);
  Series lhs = f_series(g.u_hat, g.v_hat, p.gamma, order);
  Series rhs = binomial_series((p.alpha + p.beta + p.gamma) / Rational(2), order) *
               hypergeometric_series(p.alpha, p.beta, Rational(1) - p.gamma, order);
  GaugeCheckReport report{p, g, order, true, std::nullopt,
                          std::move(lhs), std::move(rhs)};
  for (int k = 0; k <= order; ++k) {
    if (!(report.f[k] == report.product[k])) {
      report.pass = false;
      report.first_mismatch = k;
      break;
    }
  }
  return report;
}

bool factor_identity_check(const Rational& alpha, const Rational& beta, int n) {
  if (n < 1) throw std::invalid_argument("factor_identity_check: n must be >= 1");
  const HypergeometricParams p{alpha, beta, Rational(n)};
  const GaugeParams g = gauge_params(p);
  const Rational s = g.u_hat + g.v_hat;
  const auto q = [n](long i) { return Rational(i * (n - i)); };
  for (long i = 0; 2 * i < n; ++i) {
    const Rational r_i((n - 1 - 2 * i) * (n - 1 - 2 * i));
    const Rational lhs = (s + q(i)) * (s + q(i + 1)) + r_i * g.u_hat;
    const Rational rhs = (alpha + Rational(i)) * (beta + Rational(i)) *
                         (alpha + Rational(n - 1 - i)) *
                         (beta + Rational(n - 1 - i));
    if (!(lhs == rhs)) return false;
  }
  if (n % 2 == 1) {
    const long m = n / 2;
    if (!(s + q(m) == -((alpha + Rational(m)) * (beta + Rational(m))))) {
      return false;
    }
  }
  return true;
}

}  // namespace compsum
