#ifndef COMPSUM_BIPOLY_HPP
#define COMPSUM_BIPOLY_HPP

#include <map>
#include <string>

#include "compsum/rational.hpp"

namespace compsum {

// Exponent pair of a monomial u^u_deg v^v_deg.
struct Monomial {
  int u = 0;
  int v = 0;
  friend bool operator==(Monomial, Monomial) = default;
};

// Graded order: total degree ascending, then u-degree descending, so a
// degree block reads u^d, u^{d-1} v, ..., v^d. This is also the canonical
// serialization and display order of terms.
struct MonomialOrder {
  bool operator()(Monomial a, Monomial b) const {
    const int ta = a.u + a.v, tb = b.u + b.v;
    if (ta != tb) return ta < tb;
    return a.u > b.u;
  }
};

// Sparse bivariate polynomial in u, v over Rational. Canonical: no stored
// coefficient is zero, so equality is structural equality of term maps.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  BiPoly() = default;  // zero polynomial
  explicit BiPoly(const Rational& c);

  static BiPoly monomial(const Rational& c, int u_deg, int v_deg);
  static BiPoly u() { return monomial(1, 1, 0); }
  static BiPoly v() { return monomial(1, 0, 1); }
  // cu*u + cv*v + c0
  static BiPoly linear(const Rational& cu, const Rational& cv, const Rational& c0);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;  // 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }

  // Coefficient of u^u_deg v^v_deg; zero when the term is absent.
  const Rational& coefficient(int u_deg, int v_deg) const;

  void add_term(Monomial m, const Rational& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }

  Rational eval(const Rational& u0, const Rational& v0) const;

  enum class Subst { v_zero, v_neg_u, u_zero };
  // Exact substitution; the result is a polynomial in the surviving variable.
  BiPoly substitute(Subst rule) const;

  // Human-readable form, lowest degree first, e.g. "1/2 u + 1/4 v + 1/4 u^2".
  std::string str() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  TermMap terms_;
};

}  // namespace compsum

#endif
