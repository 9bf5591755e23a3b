#include "compsum/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace compsum {

namespace {
const Rational kZero = 0;
}

BiPoly::BiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rational& c, int u_deg, int v_deg) {
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Monomial{u_deg, v_deg}, c);
  return p;
}

BiPoly BiPoly::linear(const Rational& cu, const Rational& cv, const Rational& c0) {
  BiPoly p;
  p.add_term({1, 0}, cu);
  p.add_term({0, 1}, cv);
  p.add_term({0, 0}, c0);
  return p;
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const Monomial m = terms_.rbegin()->first;
  return m.u + m.v;
}

const Rational& BiPoly::coefficient(int u_deg, int v_deg) const {
  auto it = terms_.find({u_deg, v_deg});
  return it == terms_.end() ? kZero : it->second;
}

void BiPoly::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // ca*cb != 0 over the rationals, but accumulated sums can cancel;
      // add_term prunes those.
      prod.add_term({ma.u + mb.u, ma.v + mb.v}, ca * cb);
    }
  }
  return prod;
}

Rational BiPoly::eval(const Rational& u0, const Rational& v0) const {
  int max_u = 0, max_v = 0;
  for (const auto& [m, c] : terms_) {
    max_u = std::max(max_u, m.u);
    max_v = std::max(max_v, m.v);
  }
  std::vector<Rational> pu(max_u + 1), pv(max_v + 1);
  pu[0] = 1;
  for (int i = 1; i <= max_u; ++i) pu[i] = pu[i - 1] * u0;
  pv[0] = 1;
  for (int j = 1; j <= max_v; ++j) pv[j] = pv[j - 1] * v0;
  Rational acc = 0;
  for (const auto& [m, c] : terms_) acc += c * pu[m.u] * pv[m.v];
  return acc;
}

BiPoly BiPoly::substitute(Subst rule) const {
  BiPoly out;
  switch (rule) {
    case Subst::v_zero:
      for (const auto& [m, c] : terms_)
        if (m.v == 0) out.add_term(m, c);
      break;
    case Subst::u_zero:
      for (const auto& [m, c] : terms_)
        if (m.u == 0) out.add_term(m, c);
      break;
    case Subst::v_neg_u:
      for (const auto& [m, c] : terms_)
        out.add_term({m.u + m.v, 0}, (m.v % 2 == 0) ? c : -c);
      break;
  }
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool bare = m.u == 0 && m.v == 0;
    if (!mag.is_one() || bare) {
      os << mag.str();
      if (!bare) os << " ";
    }
    if (m.u > 0) {
      os << "u";
      if (m.u > 1) os << "^" << m.u;
      if (m.v > 0) os << " ";
    }
    if (m.v > 0) {
      os << "v";
      if (m.v > 1) os << "^" << m.v;
    }
  }
  return os.str();
}

}  // namespace compsum
