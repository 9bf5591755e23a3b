#ifndef COMPSUM_COMPOSITION_SUMS_HPP
#define COMPSUM_COMPOSITION_SUMS_HPP

#include <functional>
#include <vector>

#include "compsum/bipoly.hpp"
#include "compsum/composition.hpp"
#include "compsum/rational.hpp"

namespace compsum {

// S(k,l,n) = sum over all l-compositions p of n of e_k(p) / (L(p) R(p)).
// Zero when k > l, l = 0 or l > n. Exact; cost is one pass over the
// binomial(n-1, l-1) compositions.
Rational composition_sum(int k, int l, int n);

// P_n(u,v) = sum over l = 1..n, k = 0..l of S(k,l,n) u^k v^(l-k).
// Every coefficient is a positive rational.
struct GeneratingPolynomial {
  int n = 0;
  BiPoly poly;
  friend bool operator==(const GeneratingPolynomial&,
                         const GeneratingPolynomial&) = default;
};

// Structural sanity of a computed P_n: each term u^k v^(l-k) has
// 1 <= l <= n, k <= l, and a positive coefficient.
bool verify_generating_polynomial(const GeneratingPolynomial& g);

enum class Parity { even, odd };

// The factor parameters of the closed-form factorization of (n!)^2 P_n:
// q_i = i(n-i) for i = 0..m, r_i = (n-1-2i)^2 for i = 0..m-1, m = floor(n/2).
struct FactorData {
  int n = 0;
  int m = 0;
  Parity parity = Parity::odd;
  std::vector<long> q;
  std::vector<long> r;
};

FactorData factor_data(int n);

struct EnumerationOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Route 1, the definition: assemble P_n by enumerating all 2^(n-1)
// compositions. Exponential; intended for n up to the low twenties.
GeneratingPolynomial generating_poly_bruteforce(int n,
                                                const EnumerationOptions& opts = {});

// Route 2, the residue of the series recurrence at gamma = n: builds the
// coefficient table f_0..f_{n-1} with gamma specialized to n (each f_i,
// i < n, is regular there) and returns
//   P_n = (1/n^2) sum_{i<n} ((n-i)u + v) f_i.
// Polynomial time.
GeneratingPolynomial generating_poly_recurrence(int n);

// Route 3, the closed-form factorization: expands
//   prod_{i=0}^{m-1} [(u+v+q_i)(u+v+q_{i+1}) + r_i u]    (times (u+v+q_m)
// when n is odd) with integer coefficients, then divides by (n!)^2 once.
GeneratingPolynomial generating_poly_factored(int n);

// Coefficients f_0..f_N of the series solution of
//   z^2 f'' + (1-gamma) z f' + (v z/(1-z) + u z/(1-z)^2) f = 0,  f(0) = 1,
// as polynomials in (u,v) with gamma specialized to a rational value.
// The defining recurrence is i (gamma - i) f_i = sum_{j<i} ((i-j)u + v) f_j.
struct FCoefficientTable {
  Rational gamma;
  std::vector<BiPoly> entries;  // f_0..f_N
};

// Throws inadmissible_parameter when gamma is an integer in 1..max_index.
FCoefficientTable f_coefficient_table(const Rational& gamma, int max_index);

// Re-checks the defining recurrence at every index of the table.
bool verify_f_recurrence(const FCoefficientTable& table);

// a_{jk} for 0 <= j < k; must be deterministic in (j, k).
using CoefficientOracle = std::function<Rational(int j, int k)>;

// f_n from the recursion f_n = sum_{j<n} a_{jn} f_j, f_0 = 1.
Rational lemma1_recursion(int n, const CoefficientOracle& a);

// The same value as a sum over all compositions p of n (all lengths) of
// a(p) = a_{0,s_1} a_{s_1,s_2} ... a_{s_{l-1},n}; 2^(n-1) summands.
Rational lemma1_enumeration(int n, const CoefficientOracle& a);

}  // namespace compsum

#endif
