// End-to-end acceptance battery. Each criterion prints one [PASS]/[FAIL]
// line with its wall time; the process exits 0 only when all nine pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "compsum/composition_sums.hpp"
#include "compsum/hypergeometric.hpp"
#include "compsum/identities.hpp"
#include "compsum/json_io.hpp"
#include "compsum/sampling.hpp"

namespace {

using namespace compsum;
using json = nlohmann::json;
using clock_type = std::chrono::steady_clock;

bool triple_route_agreement() {
  for (int n = 1; n <= 16; ++n) {
    const GeneratingPolynomial brute = generating_poly_bruteforce(n);
    const GeneratingPolynomial rec = generating_poly_recurrence(n);
    const GeneratingPolynomial fac = generating_poly_factored(n);
    if (brute.poly != rec.poly || rec.poly != fac.poly) return false;
    if (!verify_generating_polynomial(rec)) return false;
  }
  return true;
}

bool recurrence_matches_factored_to_64() {
  for (int n = 1; n <= 64; ++n) {
    if (generating_poly_recurrence(n).poly != generating_poly_factored(n).poly)
      return false;
  }
  return true;
}

bool summation_identities_to_14() {
  for (int n = 1; n <= 14; ++n) {
    for (int l = 1; l <= n; ++l) {
      if (!identity_eq1(n, l).pass) return false;
      if (!identity_eq2(n, l).pass) return false;
      if (!identity_pn0v(n, l).pass) return false;
    }
  }
  return true;
}

bool lemma1_five_seeds() {
  for (std::uint64_t s = 0; s < 5; ++s) {
    for (int n = 1; n <= 12; ++n) {
      RationalSampler sampler(mix_seed(kDefaultSeed + s, n));
      std::map<std::pair<int, int>, Rational> table;
      for (int k = 1; k <= n; ++k) {
        for (int j = 0; j < k; ++j) table.emplace(std::pair{j, k}, sampler.next());
      }
      const CoefficientOracle a = [&table](int j, int k) { return table.at({j, k}); };
      if (lemma1_recursion(n, a) != lemma1_enumeration(n, a)) return false;
    }
  }
  return true;
}

bool gauge_identity_sampled() {
  RationalSampler sampler(kDefaultSeed);
  for (int t = 0; t < 20; ++t) {
    const HypergeometricParams p{
        sampler.next(), sampler.next(), sampler.next_where([](const Rational& g) {
          return gamma_admissible(g, 24);
        })};
    const GaugeCheckReport rep = verify_gauge_identity(p, 24);
    if (!rep.pass || rep.first_mismatch.has_value()) return false;
  }
  return true;
}

bool ode_residual_sampled() {
  RationalSampler sampler(mix_seed(kDefaultSeed, 1));
  for (int t = 0; t < 20; ++t) {
    const Rational u = sampler.next();
    const Rational v = sampler.next();
    const Rational gamma =
        sampler.next_where([](const Rational& g) { return gamma_admissible(g, 24); });
    if (!ode_residual(u, v, gamma, 24).is_zero()) return false;
  }
  return true;
}

bool factor_identities_and_qr() {
  RationalSampler sampler(mix_seed(kDefaultSeed, 2));
  for (int n = 1; n <= 12; ++n) {
    for (int t = 0; t < 20; ++t) {
      if (!factor_identity_check(sampler.next(), sampler.next(), n)) return false;
    }
  }
  for (int n = 2; n <= 50; ++n) {
    if (!qr_sum_identity(n)) return false;
  }
  return true;
}

bool frozen_values() {
  if (composition_sum(1, 1, 2) != Rational(1, 2)) return false;

  BiPoly p2;
  p2.add_term({1, 0}, Rational(1, 2));
  p2.add_term({0, 1}, Rational(1, 4));
  p2.add_term({2, 0}, Rational(1, 4));
  p2.add_term({1, 1}, Rational(1, 2));
  p2.add_term({0, 2}, Rational(1, 4));
  if (generating_poly_bruteforce(2).poly != p2) return false;

  const IdentityReport eq1 = identity_eq1(3, 2);
  if (!eq1.pass || eq1.lhs != Rational(2, 9)) return false;
  const IdentityReport eq2 = identity_eq2(4, 2);
  if (!eq2.pass || eq2.lhs != Rational(1, 64)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// criterion 9: the CLI itself

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cmd(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool cli_contract() {
  const char* bin = std::getenv("COMPSUM_CLI_BIN");
  if (!bin) {
    std::cout << "  (COMPSUM_CLI_BIN is not set)\n";
    return false;
  }
  const std::string q = "\"" + std::string(bin) + "\"";

  // round trip: poly json parses back to the library value
  const RunResult poly = run_cmd(q + " poly --n 5 --format json");
  if (poly.code != 0) return false;
  const json pj = json::parse(poly.out, nullptr, false);
  if (pj.is_discarded()) return false;
  const GeneratingPolynomial back =
      generating_poly_from_json(json{{"n", pj["n"]}, {"poly", pj["poly"]}}.dump());
  if (back.poly != generating_poly_recurrence(5).poly) return false;

  // round trip: series json parses back and matches a local recomputation
  const RunResult ser =
      run_cmd(q + " series --alpha 1/2 --beta 1/3 --gamma 1/5 --order 10");
  if (ser.code != 0) return false;
  const json sj = json::parse(ser.out, nullptr, false);
  if (sj.is_discarded() || sj["pass"] != true) return false;
  const GaugeParams g = gauge_params({Rational(1, 2), Rational(1, 3), Rational(1, 5)});
  if (series_from_json(sj["f"].dump()) !=
      f_series(g.u_hat, g.v_hat, Rational(1, 5), 10))
    return false;

  // exit codes: 0 on verified sweeps, 2 on usage errors, nothing else
  if (run_cmd(q + " verify --n-max 4 --checks eq1,theorem1").code != 0) return false;
  if (run_cmd(q + " sum --n 3 --l 3 --k 3").out != "1/36\n") return false;
  const std::vector<std::string> usage_errors = {
      " poly --n 0",
      " verify --n-max 2 --checks nope",
      " sum --n 3 --l 2",
      " series --alpha 1 --beta 1 --gamma 3 --order 8",
      " bogus",
  };
  for (const auto& args : usage_errors) {
    if (run_cmd(q + args + " 2>/dev/null").code != 2) return false;
  }
  const std::vector<std::string> battery = {
      " --help",
      " poly --n 7 --format latex",
      " bench --n-max 6",
      " verify --n-max 2 --checks qr",
      " series --alpha -2 --beta 1/2 --gamma 1/7 --order 6 --format text",
      " poly --n 0",
      " frobnicate",
  };
  for (const auto& args : battery) {
    const int code = run_cmd(q + args + " 2>/dev/null").code;
    if (code != 0 && code != 1 && code != 2) return false;
  }

  // byte-identical determinism of the randomized sweeps
  const std::string sweep =
      " verify --n-max 3 --checks lemma1,gauge,ode,factors --order 8 --trials 3";
  const RunResult a = run_cmd(q + sweep);
  const RunResult b = run_cmd(q + sweep);
  return a.code == 0 && !a.out.empty() && a.out == b.out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<bool()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"bruteforce, recurrence and factored routes agree for n <= 16",
       triple_route_agreement},
      {"recurrence matches factored form for n <= 64",
       recurrence_matches_factored_to_64},
      {"eq1, eq2 and pn0v hold for all 1 <= l <= n <= 14", summation_identities_to_14},
      {"lemma1 recursion equals enumeration, n <= 12, 5 seeds", lemma1_five_seeds},
      {"gauge identity at order 24 for 20 sampled triples", gauge_identity_sampled},
      {"ode residual vanishes at order 24 for 20 sampled points", ode_residual_sampled},
      {"factor identities for n <= 12 plus qr sums to n = 50", factor_identities_and_qr},
      {"frozen reference values", frozen_values},
      {"cli round trips, exit codes and determinism", cli_contract},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = clock_type::now();
    bool ok = false;
    std::string err;
    try {
      ok = criteria[i].fn();
    } catch (const std::exception& e) {
      err = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        clock_type::now() - t0)
                        .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
              << criteria[i].label << " (" << ms << " ms)";
    if (!err.empty()) std::cout << " [exception: " << err << "]";
    std::cout << std::endl;
    all = all && ok;
  }
  return all ? 0 : 1;
}
