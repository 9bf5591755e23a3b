#include "compsum/composition_sums.hpp"

#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>
#include <utility>

namespace compsum {

namespace {

void require_positive_n(int n, const char* where) {
  if (n < 1) {
    throw std::invalid_argument(std::string(where) + ": n must be >= 1");
  }
}

// e_k of the parts, truncated at k (the brute-force single-sum path).
Integer elementary_symmetric_int(std::span<const int> values, int k) {
  std::vector<Integer> e(static_cast<std::size_t>(k) + 1);
  e[0] = 1;
  int seen = 0;
  for (int x : values) {
    ++seen;
    for (int j = std::min(seen, k); j >= 1; --j) {
      e[j] += x * e[j - 1];
    }
  }
  return e[k];
}

// Contribution of all l-compositions of n with first part p1 (p1 = 0 means
// no restriction): sum over k of e_k(p)/(L R) u^k v^(l-k).
BiPoly bruteforce_slice(int n, int l, int p1) {
  BiPoly acc;
  auto absorb = [&](std::span<const int> parts) {
    const std::vector<Integer> e = elementary_symmetric_all(parts);
    const Integer lr = left_product(parts) * right_product(parts);
    for (int k = 0; k <= l; ++k) {
      acc.add_term({k, l - k}, Rational(e[k], lr));
    }
  };
  if (p1 == 0) {
    for_each_composition(n, l, absorb);
  } else {
    for_each_composition_with_first(n, l, p1, absorb);
  }
  return acc;
}

}  // namespace

Rational composition_sum(int k, int l, int n) {
  require_positive_n(n, "composition_sum");
  if (k < 0) throw std::invalid_argument("composition_sum: k must be >= 0");
  if (l < 0) throw std::invalid_argument("composition_sum: l must be >= 0");
  if (l == 0 || k > l || l > n) return 0;
  Rational sum = 0;
  for_each_composition(n, l, [&](std::span<const int> parts) {
    const Integer ek = elementary_symmetric_int(parts, k);
    sum += Rational(ek, left_product(parts) * right_product(parts));
  });
  return sum;
}

bool verify_generating_polynomial(const GeneratingPolynomial& g) {
  if (g.n < 1) return false;
  for (const auto& [m, c] : g.poly.terms()) {
    const int l = m.u + m.v;
    if (l < 1 || l > g.n) return false;
    if (c.sign() <= 0) return false;
  }
  return true;
}

FactorData factor_data(int n) {
  require_positive_n(n, "factor_data");
  FactorData fd;
  fd.n = n;
  fd.m = n / 2;
  fd.parity = (n % 2 == 0) ? Parity::even : Parity::odd;
  const long ln = n;
  for (long i = 0; i <= fd.m; ++i) fd.q.push_back(i * (ln - i));
  for (long i = 0; i < fd.m; ++i) {
    fd.r.push_back((ln - 1 - 2 * i) * (ln - 1 - 2 * i));
  }
  assert(fd.q[0] == 0);
  for (int i = 0; i + 1 <= fd.m; ++i) {
    assert(fd.q[i] + fd.q[i + 1] + fd.r[i] ==
           long(i) * (i + 1) + (ln - i - 1) * (ln - i));
  }
  return fd;
}

GeneratingPolynomial generating_poly_bruteforce(int n,
                                                const EnumerationOptions& opts) {
  require_positive_n(n, "generating_poly_bruteforce");
  BiPoly acc;
  if (!opts.parallel) {
    for (int l = 1; l <= n; ++l) acc += bruteforce_slice(n, l, 0);
    return {n, std::move(acc)};
  }

  // Partition the composition space by (l, first part). Exact addition makes
  // the reduction order irrelevant, so the result is deterministic.
  std::vector<std::pair<int, int>> tasks;
  for (int l = 1; l <= n; ++l) {
    for (int p1 = 1; p1 + (l - 1) <= n; ++p1) tasks.emplace_back(l, p1);
  }
  unsigned nthreads = opts.threads ? opts.threads
                                   : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, tasks.size());
  std::vector<BiPoly> partial(nthreads);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= tasks.size()) return;
        const auto [l, p1] = tasks[idx];
        partial[t] += bruteforce_slice(n, l, p1);
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& p : partial) acc += p;
  return {n, std::move(acc)};
}

FCoefficientTable f_coefficient_table(const Rational& gamma, int max_index) {
  if (max_index < 0) {
    throw std::invalid_argument("f_coefficient_table: negative index");
  }
  if (gamma.is_integer() && gamma.sign() > 0 && gamma <= Rational(max_index)) {
    throw inadmissible_parameter(
        "f coefficients: gamma = " + gamma.str() +
        " is an integer pole of the recurrence (1 <= gamma <= " +
        std::to_string(max_index) + ")");
  }
  FCoefficientTable table;
  table.gamma = gamma;
  table.entries.reserve(static_cast<std::size_t>(max_index) + 1);
  table.entries.emplace_back(Rational(1));  // f_0 = 1
  for (int i = 1; i <= max_index; ++i) {
    BiPoly sum;
    for (int j = 0; j < i; ++j) {
      sum += BiPoly::linear(i - j, 1, 0) * table.entries[j];
    }
    sum *= (Rational(i) * (gamma - Rational(i))).inverse();
    table.entries.push_back(std::move(sum));
  }
  return table;
}

bool verify_f_recurrence(const FCoefficientTable& table) {
  if (table.entries.empty() || !(table.entries[0] == BiPoly(Rational(1)))) {
    return false;
  }
  for (std::size_t i = 1; i < table.entries.size(); ++i) {
    BiPoly rhs;
    for (std::size_t j = 0; j < i; ++j) {
      rhs += BiPoly::linear(static_cast<long>(i - j), 1, 0) * table.entries[j];
    }
    const Rational divisor = Rational(static_cast<long>(i)) *
                             (table.gamma - Rational(static_cast<long>(i)));
    if (!(table.entries[i] * divisor == rhs)) return false;
  }
  return true;
}

GeneratingPolynomial generating_poly_recurrence(int n) {
  require_positive_n(n, "generating_poly_recurrence");
  // gamma := n is regular for every f_i with i < n; the residue of f_n at
  // gamma = n is then the recurrence's final step divided by n, and
  // P_n is that residue divided by n once more.
  const FCoefficientTable table = f_coefficient_table(Rational(n), n - 1);
  BiPoly acc;
  for (int i = 0; i < n; ++i) {
    acc += BiPoly::linear(n - i, 1, 0) * table.entries[i];
  }
  acc *= Rational(1, static_cast<long>(n) * n);
  return {n, std::move(acc)};
}

GeneratingPolynomial generating_poly_factored(int n) {
  require_positive_n(n, "generating_poly_factored");
  const FactorData fd = factor_data(n);
  // Integer-coefficient expansion; the single division by (n!)^2 happens
  // at the very end.
  BiPoly prod{Rational(1)};
  for (int i = 0; i < fd.m; ++i) {
    const BiPoly a = BiPoly::linear(1, 1, fd.q[i]);
    const BiPoly b = BiPoly::linear(1, 1, fd.q[i + 1]);
    prod = prod * (a * b + BiPoly::monomial(fd.r[i], 1, 0));
  }
  if (fd.parity == Parity::odd) {
    prod = prod * BiPoly::linear(1, 1, fd.q[fd.m]);
  }
  const Integer nf = factorial(static_cast<unsigned long>(n));
  prod *= Rational(Integer(1), nf * nf);
  return {n, std::move(prod)};
}

Rational lemma1_recursion(int n, const CoefficientOracle& a) {
  require_positive_n(n, "lemma1_recursion");
  std::vector<Rational> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 0; j < k; ++j) acc += a(j, k) * f[j];
    f[k] = acc;
  }
  return f[n];
}

Rational lemma1_enumeration(int n, const CoefficientOracle& a) {
  require_positive_n(n, "lemma1_enumeration");
  Rational total = 0;
  for (int l = 1; l <= n; ++l) {
    for_each_composition(n, l, [&](std::span<const int> parts) {
      Rational prod = 1;
      int s = 0;
      for (int p : parts) {
        prod *= a(s, s + p);
        s += p;
      }
      total += prod;
    });
  }
  return total;
}

}  // namespace compsum
