// compsum: verification sweeps, single values, polynomial/series printing,
// and a brute-force vs recurrence benchmark. Line-delimited JSON by default.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "compsum/composition.hpp"
#include "compsum/composition_sums.hpp"
#include "compsum/hypergeometric.hpp"
#include "compsum/identities.hpp"
#include "compsum/json_io.hpp"
#include "compsum/sampling.hpp"

namespace {

using compsum::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Fixed salts keep the per-check substreams independent of each other and
// of the order checks are selected in.
constexpr std::uint64_t kSaltLemma1 = 100000;
constexpr std::uint64_t kSaltGauge = 200000;
constexpr std::uint64_t kSaltOde = 300000;
constexpr std::uint64_t kSaltFactors = 400000;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("COMPSUM_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw CLI::ValidationError("COMPSUM_SEED",
                                 "not an unsigned integer: " + std::string(env));
    }
    return v;
  }
  return compsum::kDefaultSeed;
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

json rational_json(const Rational& r) { return json(r.str()); }

json poly_value(const compsum::BiPoly& p) {
  return json::parse(compsum::bipoly_to_json(p));
}

json series_value(const compsum::Series& s) {
  return json::parse(compsum::series_to_json(s));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
  int n_max = 0;
  std::vector<std::string> checks;
  int order = 24;
  int trials = 20;
  std::uint64_t seed = compsum::kDefaultSeed;
  std::string format = "json";
  int bruteforce_cap = 24;
  bool parallel = false;
};

void report_line(const VerifyConfig& cfg, const json& j, const std::string& text,
                 bool pass) {
  if (cfg.format == "json") {
    emit(j);
  } else {
    std::cout << (pass ? "PASS " : "FAIL ") << text << "\n";
  }
}

bool run_identity_sweep(const VerifyConfig& cfg, compsum::IdentityKind kind) {
  using Checker = compsum::IdentityReport (*)(int, int);
  Checker check = nullptr;
  switch (kind) {
    case compsum::IdentityKind::eq1: check = compsum::identity_eq1; break;
    case compsum::IdentityKind::eq2: check = compsum::identity_eq2; break;
    case compsum::IdentityKind::pn0v: check = compsum::identity_pn0v; break;
    default: return false;
  }
  bool all = true;
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int l = 1; l <= n; ++l) {
      const compsum::IdentityReport r = check(n, l);
      all = all && r.pass;
      report_line(cfg, json::parse(compsum::identity_report_to_json(r)),
                  std::string(compsum::identity_name(kind)) + " n=" +
                      std::to_string(n) + " l=" + std::to_string(l) +
                      " lhs=" + r.lhs.str() + " rhs=" + r.rhs.str(),
                  r.pass);
    }
  }
  return all;
}

bool run_theorem1(const VerifyConfig& cfg) {
  bool all = true;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const auto rec = compsum::generating_poly_recurrence(n);
    const auto fac = compsum::generating_poly_factored(n);
    bool pass = rec.poly == fac.poly;
    json routes = json::array({"recurrence", "factored"});
    if (n <= cfg.bruteforce_cap) {
      const auto brute =
          compsum::generating_poly_bruteforce(n, {.parallel = cfg.parallel});
      pass = pass && brute.poly == rec.poly;
      routes.insert(routes.begin(), "bruteforce");
    }
    pass = pass && compsum::verify_generating_polynomial(rec);
    all = all && pass;
    report_line(cfg,
                json{{"check", "theorem1"},
                     {"params", json{{"n", n}, {"routes", routes}}},
                     {"pass", pass}},
                "theorem1 n=" + std::to_string(n), pass);
  }
  return all;
}

bool run_lemma1(const VerifyConfig& cfg) {
  bool all = true;
  const int n_top = std::min(cfg.n_max, cfg.bruteforce_cap);
  for (int n = 1; n <= n_top; ++n) {
    // One deterministic table per n; the oracle must be a pure function
    // of (j, k).
    compsum::RationalSampler sampler(
        compsum::mix_seed(cfg.seed, kSaltLemma1 + static_cast<unsigned>(n)));
    std::map<std::pair<int, int>, Rational> table;
    for (int k = 1; k <= n; ++k) {
      for (int j = 0; j < k; ++j) table.emplace(std::pair{j, k}, sampler.next());
    }
    const compsum::CoefficientOracle a = [&table](int j, int k) {
      return table.at({j, k});
    };
    const Rational rec = compsum::lemma1_recursion(n, a);
    const Rational enu = compsum::lemma1_enumeration(n, a);
    const bool pass = rec == enu;
    all = all && pass;
    report_line(cfg,
                json{{"check", "lemma1"},
                     {"params", json{{"n", n}, {"seed", cfg.seed}}},
                     {"lhs", rec.str()},
                     {"rhs", enu.str()},
                     {"pass", pass}},
                "lemma1 n=" + std::to_string(n), pass);
  }
  return all;
}

bool run_gauge(const VerifyConfig& cfg) {
  bool all = true;
  for (int t = 0; t < cfg.trials; ++t) {
    compsum::RationalSampler sampler(
        compsum::mix_seed(cfg.seed, kSaltGauge + static_cast<unsigned>(t)));
    const compsum::HypergeometricParams p{
        sampler.next(), sampler.next(), sampler.next_where([&](const Rational& g) {
          return compsum::gamma_admissible(g, cfg.order);
        })};
    const auto rep = compsum::verify_gauge_identity(p, cfg.order);
    all = all && rep.pass;
    json j{{"check", "gauge"},
           {"params", json{{"alpha", rational_json(p.alpha)},
                           {"beta", rational_json(p.beta)},
                           {"gamma", rational_json(p.gamma)}}},
           {"order", cfg.order},
           {"pass", rep.pass},
           {"first_mismatch",
            rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr)}};
    report_line(cfg, j,
                "gauge trial=" + std::to_string(t) + " alpha=" + p.alpha.str() +
                    " beta=" + p.beta.str() + " gamma=" + p.gamma.str(),
                rep.pass);
  }
  return all;
}

bool run_ode(const VerifyConfig& cfg) {
  bool all = true;
  for (int t = 0; t < cfg.trials; ++t) {
    compsum::RationalSampler sampler(
        compsum::mix_seed(cfg.seed, kSaltOde + static_cast<unsigned>(t)));
    const Rational u = sampler.next();
    const Rational v = sampler.next();
    const Rational gamma = sampler.next_where([&](const Rational& g) {
      return compsum::gamma_admissible(g, cfg.order);
    });
    const compsum::Series res = compsum::ode_residual(u, v, gamma, cfg.order);
    std::optional<int> first_nonzero;
    for (int k = 0; k <= res.order(); ++k) {
      if (!res[k].is_zero()) {
        first_nonzero = k;
        break;
      }
    }
    const bool pass = !first_nonzero.has_value();
    all = all && pass;
    json j{{"check", "ode"},
           {"params", json{{"u", rational_json(u)},
                           {"v", rational_json(v)},
                           {"gamma", rational_json(gamma)}}},
           {"order", cfg.order},
           {"pass", pass},
           {"first_mismatch", first_nonzero ? json(*first_nonzero) : json(nullptr)}};
    report_line(cfg, j,
                "ode trial=" + std::to_string(t) + " u=" + u.str() +
                    " v=" + v.str() + " gamma=" + gamma.str(),
                pass);
  }
  return all;
}

bool run_factors(const VerifyConfig& cfg) {
  bool all = true;
  for (int n = 1; n <= cfg.n_max; ++n) {
    compsum::RationalSampler sampler(
        compsum::mix_seed(cfg.seed, kSaltFactors + static_cast<unsigned>(n)));
    bool pass = true;
    for (int t = 0; t < cfg.trials; ++t) {
      const Rational alpha = sampler.next();
      const Rational beta = sampler.next();
      pass = pass && compsum::factor_identity_check(alpha, beta, n);
    }
    all = all && pass;
    report_line(cfg,
                json{{"check", "factors"},
                     {"params", json{{"n", n}, {"trials", cfg.trials}}},
                     {"pass", pass}},
                "factors n=" + std::to_string(n) +
                    " trials=" + std::to_string(cfg.trials),
                pass);
  }
  return all;
}

bool run_qr(const VerifyConfig& cfg) {
  bool all = true;
  for (int n = 2; n <= cfg.n_max; ++n) {
    const bool pass = compsum::qr_sum_identity(n);
    all = all && pass;
    report_line(cfg,
                json{{"check", "qr_sum"}, {"params", json{{"n", n}}}, {"pass", pass}},
                "qr_sum n=" + std::to_string(n), pass);
  }
  return all;
}

int cmd_verify(const VerifyConfig& cfg) {
  static const std::vector<std::string> kAll = {
      "eq1", "eq2", "pn0v", "theorem1", "lemma1", "gauge", "ode", "factors", "qr"};
  std::vector<std::string> selected = cfg.checks.empty() ? kAll : cfg.checks;
  for (const auto& c : selected) {
    if (std::find(kAll.begin(), kAll.end(), c) == kAll.end()) {
      std::cerr << "compsum: unknown check '" << c << "'\n";
      return kExitUsage;
    }
  }
  bool all = true;
  // Canonical execution order regardless of the order given on the flag.
  for (const auto& name : kAll) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end())
      continue;
    if (name == "eq1") all = run_identity_sweep(cfg, compsum::IdentityKind::eq1) && all;
    else if (name == "eq2") all = run_identity_sweep(cfg, compsum::IdentityKind::eq2) && all;
    else if (name == "pn0v") all = run_identity_sweep(cfg, compsum::IdentityKind::pn0v) && all;
    else if (name == "theorem1") all = run_theorem1(cfg) && all;
    else if (name == "lemma1") all = run_lemma1(cfg) && all;
    else if (name == "gauge") all = run_gauge(cfg) && all;
    else if (name == "ode") all = run_ode(cfg) && all;
    else if (name == "factors") all = run_factors(cfg) && all;
    else if (name == "qr") all = run_qr(cfg) && all;
  }
  return all ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// poly

std::string latex_linear_factor(long q) {
  return q == 0 ? "(u+v)" : "(u+v+" + std::to_string(q) + ")";
}

std::string latex_pair_factor(long q_i, long q_next, long r) {
  return latex_linear_factor(q_i) + latex_linear_factor(q_next) + " + " +
         (r == 1 ? "u" : std::to_string(r) + "u");
}

int cmd_poly(int n, const std::string& route, const std::string& format,
             int cap, bool parallel) {
  if (route == "brute" && n > cap) {
    std::cerr << "compsum: --route brute needs n <= --bruteforce-cap (" << cap
              << "), got n=" << n << "\n";
    return kExitUsage;
  }
  compsum::GeneratingPolynomial g;
  if (route == "brute") {
    g = compsum::generating_poly_bruteforce(n, {.parallel = parallel});
  } else if (route == "factored") {
    g = compsum::generating_poly_factored(n);
  } else {
    g = compsum::generating_poly_recurrence(n);
  }
  const compsum::FactorData fd = compsum::factor_data(n);
  const compsum::Integer nf = compsum::factorial(static_cast<unsigned long>(n));

  if (format == "json") {
    json j{{"n", g.n},
           {"poly", poly_value(g.poly)},
           {"route", route == "brute" ? "bruteforce" : route},
           {"q", fd.q},
           {"r", fd.r},
           {"n_factorial_squared", compsum::Integer(nf * nf).get_str()}};
    emit(j);
    return 0;
  }

  if (format == "latex") {
    std::string prod;
    for (int i = 0; i < static_cast<int>(fd.r.size()); ++i) {
      prod += "\\left[" + latex_pair_factor(fd.q[i], fd.q[i + 1], fd.r[i]) +
              "\\right]";
    }
    if (fd.parity == compsum::Parity::odd) {
      prod += latex_linear_factor(fd.q[fd.m]);
    }
    std::cout << "P_{" << n << "} = \\frac{1}{(" << n << "!)^2}" << prod << "\n";
    for (std::size_t i = 0; i < fd.q.size(); ++i) {
      std::cout << (i == 0 ? "" : ", ") << "q_" << i << " = " << fd.q[i];
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < fd.r.size(); ++i) {
      std::cout << (i == 0 ? "" : ", ") << "r_" << i << " = " << fd.r[i];
    }
    std::cout << "\n";
    return 0;
  }

  // text
  std::cout << "P_" << n << " = " << g.poly.str() << "\n";
  std::string prod;
  for (int i = 0; i < static_cast<int>(fd.r.size()); ++i) {
    prod += "[" + latex_pair_factor(fd.q[i], fd.q[i + 1], fd.r[i]) + "]";
  }
  if (fd.parity == compsum::Parity::odd) prod += latex_linear_factor(fd.q[fd.m]);
  std::cout << "(" << n << "!)^2 P_" << n << " = " << prod << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// series

int cmd_series(const Rational& alpha, const Rational& beta, const Rational& gamma,
               int order, const std::string& format) {
  compsum::GaugeCheckReport rep{{alpha, beta, gamma}, {}, order, false, {},
                                compsum::Series(0), compsum::Series(0)};
  try {
    rep = compsum::verify_gauge_identity({alpha, beta, gamma}, order);
  } catch (const compsum::inadmissible_parameter& e) {
    std::cerr << "compsum: " << e.what() << "\n";
    return kExitUsage;
  }
  if (format == "json") {
    json j{{"check", "gauge"},
           {"params", json{{"alpha", rational_json(alpha)},
                           {"beta", rational_json(beta)},
                           {"gamma", rational_json(gamma)},
                           {"u_hat", rational_json(rep.gauge.u_hat)},
                           {"v_hat", rational_json(rep.gauge.v_hat)}}},
           {"order", order},
           {"pass", rep.pass},
           {"first_mismatch",
            rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr)},
           {"f", series_value(rep.f)},
           {"product", series_value(rep.product)}};
    emit(j);
  } else {
    auto render = [](const compsum::Series& s) {
      std::string out;
      for (int k = 0; k <= s.order(); ++k) {
        if (k) out += ", ";
        out += s[k].str();
      }
      return out;
    };
    std::cout << "u_hat   = " << rep.gauge.u_hat.str() << "\n"
              << "v_hat   = " << rep.gauge.v_hat.str() << "\n"
              << "f       = " << render(rep.f) << "\n"
              << "product = " << render(rep.product) << "\n"
              << "match   = " << (rep.pass ? "true" : "false") << "\n";
  }
  return rep.pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(int n_max, int cap, bool parallel, const std::string& format) {
  using clock = std::chrono::steady_clock;
  bool all_equal = true;
  for (int n = 1; n <= std::min(n_max, cap); ++n) {
    const auto t0 = clock::now();
    const auto brute = compsum::generating_poly_bruteforce(n, {.parallel = parallel});
    const auto t1 = clock::now();
    const auto rec = compsum::generating_poly_recurrence(n);
    const auto t2 = clock::now();
    const bool equal = brute.poly == rec.poly;
    all_equal = all_equal && equal;
    const auto us = [](clock::time_point a, clock::time_point b) {
      return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
    };
    const compsum::Integer count = compsum::Integer(1) << (n - 1);  // 2^(n-1)
    if (format == "json") {
      emit(json{{"n", n},
                {"compositions", count.get_str()},
                {"equal", equal},
                {"bruteforce_us", us(t0, t1)},
                {"recurrence_us", us(t1, t2)}});
    } else {
      std::cout << "n=" << n << " compositions=" << count.get_str()
                << " equal: " << (equal ? "true" : "false")
                << " brute=" << us(t0, t1) << "us rec=" << us(t1, t2) << "us\n";
    }
  }
  return all_equal ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact composition sums S(k,l,n), generating polynomials P_n(u,v), "
               "and their identity checks"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;
  int order = 24;
  int trials = 20;
  int bruteforce_cap = 24;
  bool parallel = false;
  std::string format = "json";

  // verify
  auto* verify = app.add_subcommand("verify", "Run check suites up to --n-max");
  VerifyConfig vcfg;
  verify->add_option("--n-max", vcfg.n_max, "Largest n to sweep")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  verify->add_option("--checks", vcfg.checks,
                     "Comma-separated subset of eq1,eq2,pn0v,theorem1,lemma1,"
                     "gauge,ode,factors,qr (default: all)")
      ->delimiter(',');
  verify->add_option("--order", order, "Series truncation order for gauge/ode");
  verify->add_option("--trials", trials, "Random trials for gauge/ode/factors");
  verify->add_option("--seed", seed_flag, "Seed for randomized checks");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--bruteforce-cap", bruteforce_cap,
                     "Largest n enumerated by brute force");
  verify->add_flag("--parallel", parallel, "Partition brute-force sums across threads");

  // poly
  auto* poly = app.add_subcommand("poly", "Print P_n and its factorization");
  int poly_n = 0;
  std::string route = "recurrence";
  poly->add_option("--n", poly_n, "Index n")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  poly->add_option("--route", route, "recurrence, brute or factored")
      ->check(CLI::IsMember({"recurrence", "brute", "factored"}));
  poly->add_option("--format", format, "json, text or latex")
      ->check(CLI::IsMember({"json", "text", "latex"}));
  poly->add_option("--bruteforce-cap", bruteforce_cap,
                   "Largest n allowed for --route brute");
  poly->add_flag("--parallel", parallel, "Partition brute-force sums across threads");

  // sum
  auto* sum = app.add_subcommand("sum", "Print S(k,l,n) as an exact rational");
  int sum_n = 0, sum_l = 0, sum_k = 0;
  sum->add_option("--n", sum_n, "Total being composed")->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  sum->add_option("--l", sum_l, "Number of parts")->required()
      ->check(CLI::Range(0, std::numeric_limits<int>::max()));
  sum->add_option("--k", sum_k, "Elementary symmetric index")->required()
      ->check(CLI::Range(0, std::numeric_limits<int>::max()));

  // series
  auto* series = app.add_subcommand(
      "series", "Check the gauge identity at rational (alpha, beta, gamma)");
  std::string alpha_s, beta_s, gamma_s;
  series->add_option("--alpha", alpha_s, "Rational, e.g. 1/2")->required();
  series->add_option("--beta", beta_s, "Rational")->required();
  series->add_option("--gamma", gamma_s, "Rational")->required();
  series->add_option("--order", order, "Series truncation order");
  series->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // bench
  auto* bench = app.add_subcommand("bench", "Time brute force vs recurrence");
  int bench_n_max = 0;
  bench->add_option("--n-max", bench_n_max, "Largest n to time")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  bench->add_option("--bruteforce-cap", bruteforce_cap,
                    "Largest n enumerated by brute force");
  bench->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  bench->add_flag("--parallel", parallel, "Partition brute-force sums across threads");

  try {
    app.parse(argc, argv);

    if (verify->parsed()) {
      if (order < 1 || trials < 1 || bruteforce_cap < 1) {
        std::cerr << "compsum: --order, --trials and --bruteforce-cap must be positive\n";
        return kExitUsage;
      }
      vcfg.order = order;
      vcfg.trials = trials;
      vcfg.seed = resolve_seed(seed_flag);
      vcfg.format = format;
      vcfg.bruteforce_cap = bruteforce_cap;
      vcfg.parallel = parallel;
      return cmd_verify(vcfg);
    }
    if (poly->parsed()) {
      return cmd_poly(poly_n, route, format, bruteforce_cap, parallel);
    }
    if (sum->parsed()) {
      std::cout << compsum::composition_sum(sum_k, sum_l, sum_n).str() << "\n";
      return 0;
    }
    if (series->parsed()) {
      if (order < 1) {
        std::cerr << "compsum: --order must be positive\n";
        return kExitUsage;
      }
      return cmd_series(parse_rational_flag(alpha_s, "--alpha"),
                        parse_rational_flag(beta_s, "--beta"),
                        parse_rational_flag(gamma_s, "--gamma"), order, format);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_n_max, bruteforce_cap, parallel, format);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "compsum: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
