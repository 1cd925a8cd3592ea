#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/asympt.hpp"
#include "artin/census.hpp"
#include "artin/constants.hpp"
#include "artin/expsum.hpp"
#include "artin/prchar.hpp"
#include "artin/selftest.hpp"

namespace artin::cli {

namespace {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Meissel-Mertens constant, lim (sum_{p <= x} 1/p - log log x).
constexpr long double kMertens = 0.261497212847642783755426838608695859L;

bool uses_u(Subcommand s) {
  switch (s) {
    case Subcommand::Primes:
    case Subcommand::Integers:
    case Subcommand::Classify:
    case Subcommand::Wieferich:
    case Subcommand::Wset:
    case Subcommand::Verify:
    case Subcommand::Constants: return true;
    default: return false;
  }
}

Cell opt_real(const std::optional<long double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Table count_table(const CensusResult& r) {
  return {{"u", "x", "count", "elapsed_ms"},
          {{std::int64_t{r.u}, std::uint64_t{r.x}, std::uint64_t{r.count}, static_cast<long double>(r.elapsed.count())}}};
}

void emit_census(const RunConfig& cfg, const CensusResult& r) {
  if (!cfg.count_file.empty()) write_output(cfg.count_file, render(count_table(r), cfg.format));
  if (cfg.counts_only) {
    write_output(cfg.output, render(count_table(r), cfg.format), cfg.gzip);
    return;
  }
  if (cfg.format == Format::Json) {
    nlohmann::json j = {{"u", r.u}, {"x", r.x}, {"count", r.count}, {"members", *r.members}};
    write_output(cfg.output, j.dump(2) + "\n", cfg.gzip);
  } else {
    write_output(cfg.output, render_list(*r.members), cfg.gzip);
  }
}

Table constants_table(const RunConfig& cfg) {
  const u64 x = cfg.limit ? cfg.limit : 1000;
  const auto alpha = artin_product(cfg.alpha_bound);
  const auto primes = *enum_primes_with_root(cfg.u, x, {.workers = cfg.workers}).members;
  const auto beta = beta_estimate(primes, x, alpha.value);
  const auto gamma_u = gamma_estimate(primes, x, alpha.value);
  const auto nu = nu_estimate(primes, x);
  const auto wief = wieferich_scan(cfg.u, 1'000'000, cfg.workers);
  auto kappa = kappa_estimate(true, wief, alpha.value, gamma_u.value);
  auto kappa_emp = kappa_estimate(false, wief, alpha.value, gamma_u.value);
  kappa.truncation = kappa_emp.truncation = alpha.truncation;

  std::string wlist;
  for (u64 p : wief) wlist += (wlist.empty() ? "" : " ") + std::to_string(p);
  std::vector<ConstantEstimate> rows = {alpha, beta, gamma_u, nu, kappa, kappa_emp};
  rows.push_back({"wieferich_product", wieferich_product(wief), 1'000'000, std::nullopt,
                  "W = {" + wlist + "} from the Fermat-quotient scan to 10^6"});
  rows.push_back({"beta1_times_alpha", kMertens * alpha.value, alpha.truncation, std::nullopt,
                  "Meissel-Mertens constant times alpha, compare with beta"});
  rows.push_back({"euler_gamma_times_alpha", kEulerGamma * alpha.value, alpha.truncation, std::nullopt,
                  "Euler gamma times alpha, compare with gamma_u"});

  Table t{{"name", "value", "truncation", "tail_bound", "convention"}, {}};
  for (const auto& c : rows) t.rows.push_back({c.name, c.value, std::uint64_t{c.truncation}, opt_real(c.tail_bound), c.convention});
  return t;
}

Table verify_table(const RunConfig& cfg) {
  std::vector<u64> grid = cfg.grid;
  if (grid.empty()) grid = {1000, 10'000, 100'000, 1'000'000};
  u64 top = 3;
  for (u64 x : grid) {
    if (x < 3) throw ValidationError("verify: grid points must be >= 3");
    top = std::max(top, x);
  }
  if (top > sieve_ceiling()) throw ValidationError("verify: grid exceeds sieve ceiling");
  std::vector<std::string> formulas = cfg.formulas;
  if (formulas.empty()) formulas.assign(std::begin(kFormulaIds), std::end(kFormulaIds));
  for (const auto& f : formulas) {
    if (std::find(std::begin(kFormulaIds), std::end(kFormulaIds), f) == std::end(kFormulaIds))
      throw ValidationError("verify: unknown formula id '" + f + "'");
  }
  VerificationContext ctx(top, {.u = cfg.u,
                                .workers = cfg.workers,
                                .moment_k = cfg.moment_k,
                                .empirical_exponent = cfg.empirical_exponent});
  Table t;
  t.columns = cfg.plot_data ? std::vector<std::string>{"x", "ratio"}
                            : std::vector<std::string>{"formula_id", "x", "empirical", "predicted", "ratio"};
  for (const auto& f : formulas) {
    for (const auto& row : comparison_table(f, grid, ctx)) {
      if (cfg.plot_data)
        t.rows.push_back({std::uint64_t{row.x}, row.ratio});
      else
        t.rows.push_back({row.formula_id, std::uint64_t{row.x}, row.empirical, row.predicted, row.ratio});
    }
  }
  return t;
}

std::vector<Cell> stat_row(const ExpSumStat& s, std::string kind) {
  return {std::uint64_t{s.p}, std::move(kind), std::int64_t{s.param}, static_cast<long double>(s.value.real()),
          static_cast<long double>(s.value.imag()), static_cast<long double>(s.modulus)};
}

Table expsum_table(const RunConfig& cfg) {
  if (cfg.kind == "bound") {
    const u64 x = cfg.limit ? cfg.limit : 1000;
    const auto bt = bound_table(x, cfg.samples);
    Table t{{"p", "max_modulus", "phi_bound", "envelope"}, {}};
    for (const auto& r : bt.rows)
      t.rows.push_back({std::uint64_t{r.p}, static_cast<long double>(r.max_modulus), std::uint64_t{r.phi_bound},
                        static_cast<long double>(r.envelope)});
    std::cerr << "sum max|V_p|/p = " << bt.normalized_sum << ", envelope x/((log log x)(log x)) = " << bt.envelope
              << "\n";
    return t;
  }
  if (!is_prime(cfg.p)) throw ValidationError("expsum: --p must be prime");
  Table t{{"p", "kind", "param", "re", "im", "modulus"}, {}};
  if (cfg.kind == "full") {
    const auto s = full_additive_sum(cfg.param, cfg.p);
    t.rows.push_back(stat_row(s.full, "FullAdditive"));
    t.rows.push_back(stat_row(s.punctured, "FullAdditivePunctured"));
  } else if (cfg.kind == "u") {
    t.rows.push_back(stat_row(u_sum(cfg.param, cfg.p), "U"));
  } else if (cfg.kind == "v") {
    t.rows.push_back(stat_row(v_sum(cfg.p, cfg.param), "V"));
  } else if (cfg.kind == "theta") {
    t.rows.push_back(stat_row(theta_power_sum(cfg.theta, cfg.t, cfg.param, cfg.p), "ThetaPower"));
  } else if (cfg.kind == "exact") {
    const auto r = exact_order_character_sum(cfg.param, cfg.p);
    t.rows.push_back(stat_row(r.stat, "ExactOrderCharacter"));
    if (r.discrepancy)
      std::cerr << "exact-order character sum differs from the closed form " << r.claimed << "\n";
  } else {
    throw ValidationError("expsum: unknown --kind '" + cfg.kind + "'");
  }
  return t;
}

int run_checked(const RunConfig& cfg) {
  if (uses_u(cfg.subcommand) && !is_admissible(cfg.u) && !cfg.allow_inadmissible) {
    throw ValidationError("u = " + std::to_string(cfg.u) +
                          " is not admissible (0, +-1 or a perfect square); pass --allow-inadmissible to override");
  }
  switch (cfg.subcommand) {
    case Subcommand::Primes: {
      if (cfg.limit < 2) throw ValidationError("primes: --limit must be >= 2");
      if (cfg.limit > sieve_ceiling()) throw ValidationError("primes: --limit exceeds sieve ceiling");
      emit_census(cfg, enum_primes_with_root(cfg.u, cfg.limit, {.workers = cfg.workers}));
      return kExitOk;
    }
    case Subcommand::Integers: {
      if (cfg.limit < 1) throw ValidationError("integers: --limit must be >= 1");
      if (cfg.limit > sieve_ceiling()) throw ValidationError("integers: --limit exceeds sieve ceiling");
      const SpfTable table(std::max<u64>(cfg.limit, 2), sieve_ceiling());
      emit_census(cfg, enum_integers_with_root(cfg.u, cfg.limit, table, {.workers = cfg.workers}));
      return kExitOk;
    }
    case Subcommand::Classify: {
      if (cfg.n < 1) throw ValidationError("classify: --n must be >= 1");
      const auto r = classify(cfg.u, cfg.n);
      Table t{{"u", "n", "class", "lambda", "order"}, {}};
      Cell order = std::monostate{};
      if (r.order) order = std::uint64_t{*r.order};
      t.rows.push_back({std::int64_t{cfg.u}, std::uint64_t{r.n}, std::string(to_string(r.cls)), std::uint64_t{r.lambda}, order});
      write_output(cfg.output, render(t, cfg.format));
      return kExitOk;
    }
    case Subcommand::Wieferich: {
      Table t{{"u", "p"}, {}};
      for (u64 p : wieferich_scan(cfg.u, cfg.limit, cfg.workers)) t.rows.push_back({std::int64_t{cfg.u}, std::uint64_t{p}});
      write_output(cfg.output, render(t, cfg.format));
      return kExitOk;
    }
    case Subcommand::Wset: {
      Table t{{"u", "p", "order_mod_p", "order_mod_p2"}, {}};
      for (const auto& h : wset_scan(cfg.u, cfg.limit, cfg.workers))
        t.rows.push_back({std::int64_t{cfg.u}, std::uint64_t{h.p}, std::uint64_t{h.order_mod_p}, std::uint64_t{h.order_mod_p2}});
      write_output(cfg.output, render(t, cfg.format));
      return kExitOk;
    }
    case Subcommand::Constants:
      write_output(cfg.output, render(constants_table(cfg), cfg.format));
      return kExitOk;
    case Subcommand::Verify:
      write_output(cfg.output, render(verify_table(cfg), cfg.format));
      return kExitOk;
    case Subcommand::Expsum:
      write_output(cfg.output, render(expsum_table(cfg), cfg.format));
      return kExitOk;
    case Subcommand::PsiCheck: {
      const u64 bound = cfg.limit ? cfg.limit : 200;
      if (bound > kPsiPrimeLimit) throw ValidationError("psi-check: --limit exceeds 10^4");
      const auto r = psi_equivalence_sweep(bound);
      Table t{{"primes", "pairs", "mismatches", "max_residual"},
              {{std::uint64_t{r.primes_checked}, std::uint64_t{r.pairs_checked}, std::uint64_t{r.mismatches},
                static_cast<long double>(r.max_residual)}}};
      write_output(cfg.output, render(t, cfg.format));
      return r.mismatches ? kExitValidation : kExitOk;
    }
    case Subcommand::Selftest: {
      const auto results = run_selftest({.workers = cfg.workers});
      Table t{{"module", "check", "passed", "seconds", "detail"}, {}};
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        t.rows.push_back({r.module, r.name, r.passed, static_cast<long double>(r.seconds), r.detail});
      }
      write_output(cfg.output, render(t, cfg.format));
      return all ? kExitOk : kExitValidation;
    }
  }
  return kExitOk;
}

}  // namespace

std::uint64_t sieve_ceiling() {
  if (const char* env = std::getenv("ARTIN_SIEVE_LIMIT"); env && *env) return parse_exact_integer(env);
  return SpfTable::kDefaultCeiling;
}

int run(const RunConfig& cfg) {
  try {
    return run_checked(cfg);
  } catch (const Inconsistent& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "artin");
  for (auto& s : storage) argv.push_back(s.data());
  return main_entry(static_cast<int>(argv.size()), argv.data());
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Primitive-root census, constants and asymptotic comparisons"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "csv", limit, grid, n, alpha_bound;
  std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", cfg.output, "Output path ('-' for stdout); written atomically");
    sub->add_option("--workers", cfg.workers, "Worker threads (default: hardware concurrency)");
  };
  auto with_u = [&](CLI::App* sub) {
    sub->add_option("--u", cfg.u, "Base u (default 2)");
    sub->add_flag("--allow-inadmissible", cfg.allow_inadmissible, "Accept u in {0, +-1} or a perfect square");
  };
  auto with_limit = [&](CLI::App* sub, const char* help) { return sub->add_option("--limit,--x", limit, help); };

  struct Entry {
    const char* name;
    Subcommand cmd;
    const char* help;
  };
  const Entry entries[] = {
      {"primes", Subcommand::Primes, "Primes p <= limit with ord_p(u) = p - 1"},
      {"integers", Subcommand::Integers, "Integers n <= limit with ord_n(u) = lambda(n)"},
      {"classify", Subcommand::Classify, "Classify n as InN, InAOnly or Neither"},
      {"wieferich", Subcommand::Wieferich, "Primes with u^(p-1) = 1 mod p^2"},
      {"wset", Subcommand::Wset, "Primes with u primitive mod p but not mod p^2"},
      {"constants", Subcommand::Constants, "alpha, beta, gamma_u, nu, kappa with tail bounds"},
      {"verify", Subcommand::Verify, "Empirical-vs-predicted comparison tables"},
      {"expsum", Subcommand::Expsum, "Character and exponential sums"},
      {"psi-check", Subcommand::PsiCheck, "Characteristic-function equivalence sweep"},
      {"selftest", Subcommand::Selftest, "Full invariant suite"},
  };
  std::map<CLI::App*, Subcommand> lookup;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    lookup[sub] = e.cmd;
    common(sub);
    switch (e.cmd) {
      case Subcommand::Primes:
      case Subcommand::Integers:
        with_u(sub);
        with_limit(sub, "Upper bound x");
        sub->add_flag("--gzip", cfg.gzip, "Gzip the member list (requires --output)");
        sub->add_flag("--counts-only", cfg.counts_only, "Emit u,x,count,elapsed_ms instead of members");
        sub->add_option("--count-file", cfg.count_file, "Also write the count row to this path");
        break;
      case Subcommand::Classify:
        with_u(sub);
        sub->add_option("--n", n, "Integer to classify")->required();
        break;
      case Subcommand::Wieferich:
      case Subcommand::Wset:
        with_u(sub);
        with_limit(sub, "Prime bound (< 2^32)")->required();
        break;
      case Subcommand::Constants:
        with_u(sub);
        with_limit(sub, "Prime truncation for beta, gamma_u, nu (default 1000)");
        sub->add_option("--alpha-bound", alpha_bound, "Prime truncation for alpha (default 1e7)");
        break;
      case Subcommand::Verify:
        with_u(sub);
        sub->add_option("--formula", cfg.formulas, "Formula ids (N2 N2_lower PI_U HARMONIC MOMENT_K PHI_P)")
            ->delimiter(',');
        sub->add_option("--grid", grid, "Comma-separated x values, e.g. 1e4,1e5,1e6");
        sub->add_flag("--plot-data", cfg.plot_data, "Emit x,ratio pairs only");
        sub->add_flag("--empirical-exponent", cfg.empirical_exponent, "Use e^(gamma_u - gamma alpha) instead of 1");
        sub->add_option("--k", cfg.moment_k, "Totient moment order")->check(CLI::Range(1, 3));
        break;
      case Subcommand::Expsum:
        sub->add_option("--kind", cfg.kind, "full, u, v, theta, exact or bound")
            ->check(CLI::IsMember({"full", "u", "v", "theta", "exact", "bound"}));
        sub->add_option("--p", cfg.p, "Prime modulus");
        sub->add_option("--param", cfg.param, "u for full/u/exact, k for v, a for theta");
        sub->add_option("--theta", cfg.theta, "Base of the theta-power sum");
        sub->add_option("--t", cfg.t, "Length of the theta-power sum");
        with_limit(sub, "x for the bound table");
        sub->add_option("--samples", cfg.samples, "Sampled k per prime in the bound table");
        break;
      case Subcommand::PsiCheck:
        with_limit(sub, "Check all primes below this bound (default 200)");
        break;
      case Subcommand::Selftest:
        break;
    }
  }

  try {
    app.parse(argc, argv);
    cfg.format = formats.at(format);
    if (!limit.empty()) cfg.limit = parse_exact_integer(limit);
    if (!n.empty()) cfg.n = parse_exact_integer(n);
    if (!grid.empty()) cfg.grid = parse_grid(grid);
    if (!alpha_bound.empty()) cfg.alpha_bound = parse_exact_integer(alpha_bound);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  for (const auto& [sub, cmd] : lookup) {
    if (sub->parsed()) cfg.subcommand = cmd;
  }
  return run(cfg);
}

}  // namespace artin::cli
