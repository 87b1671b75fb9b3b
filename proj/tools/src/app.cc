// Copyright 2026 The gflbdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gflbdp_cli/app.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gflbdp/gflbdp.h"
#include "gflbdp_cli/verify.h"

namespace gflbdp::cli {
namespace {

using Cell = std::variant<double, std::int64_t, std::uint64_t, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(v);
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
  } visit;
  return std::visit(visit, c);
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, c);
}

struct OutputFlags {
  std::string path;
  std::string format = "csv";
};

void emit(const Table& table, const OutputFlags& of, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!of.path.empty()) {
    file.open(of.path);
    if (!file) throw DomainError("cannot open output file '" + of.path + "'");
    os = &file;
  }
  if (of.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < r.size(); ++i) obj[table.header[i]] = cell_json(r[i]);
      rows.push_back(std::move(obj));
    }
    *os << rows.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      *os << (i ? "," : "") << table.header[i];
    }
    *os << '\n';
    for (const auto& r : table.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) *os << (i ? "," : "") << cell_text(r[i]);
      *os << '\n';
    }
  }
  os->flush();
  if (!*os) throw NumericError("writing output failed");
}

void add_output_flags(CLI::App* cmd, OutputFlags& of) {
  cmd->add_option("-o,--output", of.path, "Write results to this file instead of stdout");
  cmd->add_option("--format", of.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_process_flags(CLI::App* cmd, ProcessParams& p) {
  cmd->add_option("--lambda", p.lambda, "Birth rate per individual")->capture_default_str();
  cmd->add_option("--mu", p.mu, "Death rate per individual")->capture_default_str();
  cmd->add_option("--alpha", p.alpha, "Symbol exponent alpha in (0,1]")->capture_default_str();
  cmd->add_option("--beta", p.beta, "Symbol weight beta > 0")->capture_default_str();
  cmd->add_option("--gamma", p.gamma, "Symbol power gamma >= 0")->capture_default_str();
  cmd->add_option("--rho", p.rho, "Order rho in (0,1]")->capture_default_str();
}

void add_genetic_flags(CLI::App* cmd, GeneticParams& gp) {
  cmd->add_option("--M", gp.M, "Population size M = 2K (even)")->capture_default_str();
  cmd->add_option("--n0", gp.n0, "Initial number of type-H individuals")->capture_default_str();
  cmd->add_option("--lambda", gp.lambda, "Rate lambda")->capture_default_str();
  cmd->add_option("--mu", gp.mu, "Rate mu")->capture_default_str();
  cmd->add_option("--rho", gp.rho, "Order rho of the time change")->capture_default_str();
}

// Times from --t (comma-separated list) or --t-grid start:stop:count.
struct TimeFlags {
  std::vector<double> list;
  std::string grid;

  std::vector<double> resolve(bool allow_zero) const {
    std::vector<double> ts = list;
    if (!grid.empty()) {
      if (!ts.empty()) throw DomainError("give either --t or --t-grid, not both");
      double a = 0, b = 0;
      long count = 0;
      char c1 = 0, c2 = 0;
      std::istringstream is(grid);
      if (!(is >> a >> c1 >> b >> c2 >> count) || c1 != ':' || c2 != ':' || !is.eof() ||
          count < 1 || (count > 1 && !(b > a))) {
        throw DomainError("--t-grid expects start:stop:count with stop > start and count >= 1");
      }
      for (long i = 0; i < count; ++i) {
        ts.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / (count - 1));
      }
    }
    if (ts.empty()) ts.push_back(1.0);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!std::isfinite(ts[i]) || ts[i] < 0.0 || (!allow_zero && ts[i] == 0.0)) {
        throw DomainError(allow_zero ? "times must be finite and >= 0"
                                     : "times must be finite and > 0");
      }
      if (i > 0 && !(ts[i] > ts[i - 1])) throw DomainError("times must be strictly increasing");
    }
    return ts;
  }
};

void add_time_flags(CLI::App* cmd, TimeFlags& tf) {
  cmd->add_option("-t,--t", tf.list, "Time point(s), comma-separated (default 1)")
      ->delimiter(',');
  cmd->add_option("--t-grid", tf.grid, "Uniform grid start:stop:count, inclusive");
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || ptr != end) {
    throw DomainError(std::string(kSeedEnv) + " must be an unsigned integer");
  }
  return v;
}

struct McFlags {
  std::int64_t n_paths = 20000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned threads = 0;
  int steps_per_mean = GridConfig{}.steps_per_mean;
  std::int64_t max_events = GillespieConfig{}.max_events;

  MCOptions options() const {
    MCOptions o;
    o.n_paths = n_paths;
    o.seed = seed_given ? seed : default_seed();
    o.threads = threads;
    o.grid.steps_per_mean = steps_per_mean;
    o.gillespie.max_events = max_events;
    return o;
  }
};

void add_mc_flags(CLI::App* cmd, McFlags& mf) {
  cmd->add_option("--n-paths", mf.n_paths, "Number of Monte Carlo paths (>= 100)")
      ->capture_default_str();
  cmd->add_option_function<std::uint64_t>(
      "--seed",
      [&mf](const std::uint64_t& s) {
        mf.seed = s;
        mf.seed_given = true;
      },
      std::string("Seed (default: $") + kSeedEnv + " or " + std::to_string(kDefaultSeed) + ")");
  cmd->add_option("--threads", mf.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();
  cmd->add_option("--steps-per-mean", mf.steps_per_mean,
                  "Clock grid resolution: steps per E Q(t)")
      ->capture_default_str();
  cmd->add_option("--max-events", mf.max_events, "Event cap per Gillespie path")
      ->capture_default_str();
}

std::vector<Cell> estimate_row(double t, const MCEstimate& e) {
  return {t, e.value, e.std_error, e.n_paths, e.seed};
}

void warn_failures(const MCEstimate& e, std::ostream& err) {
  if (e.failed_paths > 0) {
    err << "warning: " << e.failed_paths << " of " << (e.n_paths + e.failed_paths)
        << " paths hit a simulation cap and were excluded (failure fraction "
        << e.failure_fraction() << ")\n";
  }
}

// All flag storage lives here so the CLI11 callbacks can bind to it.
struct State {
  OutputFlags out;
  ProcessParams process;
  GeneticParams genetic;
  PrabhakarIntegralParams prabhakar;
  TimeFlags times;
  McFlags mc;
  MLArgs ml;
  int ml_max_terms = kDefaultTermCap;
  double series_tol = 1e-8;
  int state = 1;
  int cf_terms = 0;
  double u = 0.0, v = 0.0, z = 1.0, c = 1.0;
  std::string kind = "mean";
  std::string csv_dir;
  bool asymptotic = false;
  bool integral = false;
  int n_paths_dump = 3;
};

EvalConfig eval_config(const State& s) {
  EvalConfig cfg;
  cfg.tol = s.series_tol;
  return cfg;
}

int cmd_ml(const State& s, std::ostream& out) {
  const MLEvaluation r = mittag_leffler_3p_eval(s.ml, s.ml_max_terms);
  Table t{{"value", "terms", "last_term", "error_estimate", "method"}, {}};
  t.rows.push_back({r.value, static_cast<std::int64_t>(r.terms), r.last_term,
                    r.error_estimate, std::string(r.asymptotic ? "asymptotic" : "series")});
  emit(t, s.out, out);
  return kExitOk;
}

int cmd_analytics(const std::string& sub, const State& s, std::ostream& out) {
  const ProcessParams& p = s.process;
  p.validate();
  const EvalConfig cfg = eval_config(s);
  const std::vector<double> ts = s.times.resolve(true);
  Table table{{"t", "value"}, {}};
  if (sub == "cf") {
    table.header = {"t", "re", "im"};
    for (double t : ts) {
      const auto phi = joint_cf_gflbdp(s.u, s.v, p, t, s.cf_terms, cfg);
      table.rows.push_back({t, phi.real(), phi.imag()});
    }
    emit(table, s.out, out);
    return kExitOk;
  }
  for (double t : ts) {
    double v = 0.0;
    if (sub == "mean") {
      v = mean_gflbdp(p, t, cfg);
    } else if (sub == "variance") {
      v = variance_gflbdp(p, t, cfg);
    } else if (sub == "extinction") {
      v = s.asymptotic ? asymptotic_extinction(p, t, cfg) : extinction_prob(p, t, cfg);
    } else if (sub == "state-prob") {
      if (s.state == 0) {
        v = s.asymptotic ? asymptotic_extinction(p, t, cfg) : extinction_prob(p, t, cfg);
      } else {
        v = s.asymptotic ? asymptotic_state_prob(p, s.state, t, cfg)
                         : state_prob(p, s.state, t, cfg);
      }
    } else if (sub == "survival") {
      v = survival_interarrival(p, s.c, t, cfg);
    } else if (sub == "prabhakar-mean") {
      v = mean_prabhakar_integral(p, s.prabhakar, t, cfg);
    } else {
      throw DomainError("unknown analytics subcommand '" + sub + "'");
    }
    table.rows.push_back({t, v});
  }
  emit(table, s.out, out);
  return kExitOk;
}

int cmd_simulate_estimate(const State& s, std::ostream& out, std::ostream& err) {
  MCQuery q;
  q.kind = parse_mc_kind(s.kind);
  q.n = s.state;
  q.u = s.u;
  q.v = s.v;
  q.z = s.z;
  const MCOptions opts = s.mc.options();
  const bool genetic = q.kind == MCKind::kGeneticMean ||
                       q.kind == MCKind::kGeneticPathIntegralMean;
  // Genetic kinds take lambda, mu and rho from the process flags.
  GeneticParams gp = s.genetic;
  gp.lambda = s.process.lambda;
  gp.mu = s.process.mu;
  gp.rho = s.process.rho;
  Table table{{"t", "value", "stderr", "n_paths", "seed"}, {}};
  if (q.kind == MCKind::kJointCF) {
    table.header = {"t", "re", "im", "re_stderr", "im_stderr", "n_paths", "seed"};
  }
  for (double t : s.times.resolve(false)) {
    q.t = t;
    const MCEstimate e = genetic ? mc_estimate(gp, q, opts)
                                 : mc_estimate(s.process, q, opts);
    warn_failures(e, err);
    if (q.kind == MCKind::kJointCF) {
      table.rows.push_back({t, e.value, e.im_value, e.std_error, e.im_std_error, e.n_paths, e.seed});
    } else {
      table.rows.push_back(estimate_row(t, e));
    }
  }
  emit(table, s.out, out);
  return kExitOk;
}

int cmd_simulate_paths(const State& s, std::ostream& out) {
  if (s.n_paths_dump < 1) throw DomainError("--n must be at least 1");
  const std::vector<double> ts = s.times.resolve(false);
  if (ts.size() != 1) throw DomainError("simulate paths takes a single --t (the horizon)");
  const MCOptions opts = s.mc.options();
  Table table{{"path_id", "jump_time", "state"}, {}};
  for (int i = 0; i < s.n_paths_dump; ++i) {
    Rng rng(opts.seed, static_cast<std::uint64_t>(i));
    const SamplePath path = time_changed_path(s.process, ts.front(), rng, opts.grid, opts.gillespie);
    for (std::size_t k = 0; k < path.jump_times.size(); ++k) {
      table.rows.push_back({static_cast<std::int64_t>(i), path.jump_times[k], path.states[k]});
    }
  }
  emit(table, s.out, out);
  return kExitOk;
}

int cmd_genetic(const std::string& sub, const State& s, std::ostream& out, std::ostream& err) {
  s.genetic.validate();
  Table table{{"t", "value"}, {}};
  if (sub == "simulate") {
    MCQuery q;
    q.kind = s.integral ? MCKind::kGeneticPathIntegralMean : MCKind::kGeneticMean;
    const MCOptions opts = s.mc.options();
    table.header = {"t", "value", "stderr", "n_paths", "seed"};
    for (double t : s.times.resolve(false)) {
      q.t = t;
      const MCEstimate e = mc_estimate(s.genetic, q, opts);
      warn_failures(e, err);
      table.rows.push_back(estimate_row(t, e));
    }
    emit(table, s.out, out);
    return kExitOk;
  }
  for (double t : s.times.resolve(sub != "avg")) {
    double v = 0.0;
    if (sub == "mean") {
      v = genetic_mean(s.genetic, t);
    } else if (sub == "avg") {
      v = s.asymptotic ? genetic_avg_type_h_asymptotic(s.genetic, t)
                       : genetic_avg_type_h(s.genetic, t);
    } else if (sub == "path-integral-mean") {
      v = genetic_time_changed_path_integral_mean(s.genetic, t);
    } else {
      throw DomainError("unknown genetic subcommand '" + sub + "'");
    }
    table.rows.push_back({t, v});
  }
  emit(table, s.out, out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, const State& s, std::ostream& out) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  Table table{{"suite", "check", "status", "error", "tolerance", "note"}, {}};
  int failed = 0;
  for (const auto& name : suites) {
    SuiteOptions opts;
    opts.csv_dir = s.csv_dir;
    for (const auto& r : run_suite(name, opts)) {
      if (!r.passed) ++failed;
      table.rows.push_back({name, r.name, std::string(r.passed ? "PASS" : "FAIL"), r.error,
                            r.tolerance, r.note});
    }
  }
  if (s.out.format == "json" || !s.out.path.empty()) {
    emit(table, s.out, out);
  } else {
    for (const auto& r : table.rows) {
      out << std::get<std::string>(r[2]) << "  [" << std::get<std::string>(r[0]) << "] "
          << std::get<std::string>(r[1]) << "  error=" << cell_text(r[3])
          << " tol=" << cell_text(r[4]);
      const auto& note = std::get<std::string>(r[5]);
      if (!note.empty()) out << "  (" << note << ")";
      out << '\n';
    }
    out << (failed ? "FAILED: " : "OK: ") << table.rows.size() - failed << "/"
        << table.rows.size() << " checks passed\n";
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized fractional linear birth-death process toolkit", "gflbdp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");
  auto state = std::make_unique<State>();
  State& s = *state;
  std::string sub;

  CLI::App* ml = app.add_subcommand("ml", "Three-parameter Mittag-Leffler function E^g_{a,b}(x)");
  ml->add_option("--alpha", s.ml.alpha, "alpha > 0")->capture_default_str();
  ml->add_option("--beta-ml", s.ml.beta_ml, "beta > 0")->capture_default_str();
  ml->add_option("--gamma-ml", s.ml.gamma_ml, "gamma >= 0")->capture_default_str();
  ml->add_option("--x", s.ml.x, "Argument")->capture_default_str();
  ml->add_option("--tol", s.ml.tol, "Relative truncation tolerance")->capture_default_str();
  ml->add_option("--max-terms", s.ml_max_terms, "Series term cap")->capture_default_str();
  add_output_flags(ml, s.out);

  CLI::App* analytics = app.add_subcommand("analytics", "Series evaluation over time points");
  analytics->require_subcommand(1);
  const std::pair<const char*, const char*> analytic_subs[] = {
      {"mean", "E N(t)"},
      {"variance", "Var N(t)"},
      {"extinction", "Pr{N(t) = 0}"},
      {"state-prob", "Pr{N(t) = n}"},
      {"survival", "E exp(-c Q(t)), the inter-arrival survival"},
      {"cf", "Joint characteristic function of N(t) and its path integral"},
      {"prabhakar-mean", "Mean of the Prabhakar integral of the process"},
  };
  for (const auto& [name, desc] : analytic_subs) {
    CLI::App* c = analytics->add_subcommand(name, desc);
    add_process_flags(c, s.process);
    add_time_flags(c, s.times);
    add_output_flags(c, s.out);
    c->add_option("--tol", s.series_tol, "Series truncation tolerance")->capture_default_str();
    const std::string n(name);
    if (n == "state-prob") {
      c->add_option("-n,--n", s.state, "State n >= 0")->capture_default_str();
    }
    if (n == "state-prob" || n == "extinction") {
      c->add_flag("--asymptotic", s.asymptotic, "Use the large-t approximation");
    }
    if (n == "survival") c->add_option("--c", s.c, "Exponential clock rate c")->capture_default_str();
    if (n == "cf") {
      c->add_option("--u", s.u, "Argument of N")->capture_default_str();
      c->add_option("--v", s.v, "Argument of the path integral")->capture_default_str();
      c->add_option("--terms", s.cf_terms, "Outer series terms, 0 = adaptive")->capture_default_str();
    }
    if (n == "prabhakar-mean") {
      c->add_option("--alpha-p", s.prabhakar.alpha_p, "Kernel alpha'")->capture_default_str();
      c->add_option("--rho-p", s.prabhakar.rho_p, "Kernel rho'")->capture_default_str();
      c->add_option("--beta-p", s.prabhakar.beta_p, "Kernel beta'")->capture_default_str();
      c->add_option("--gamma-p", s.prabhakar.gamma_p, "Kernel gamma'")->capture_default_str();
    }
    c->callback([&sub, n] { sub = n; });
  }

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo simulation");
  simulate->require_subcommand(1);
  CLI::App* estimate = simulate->add_subcommand("estimate", "Monte Carlo estimate per time point");
  add_process_flags(estimate, s.process);
  estimate->add_option("--M", s.genetic.M, "Genetic kinds: population size M")
      ->capture_default_str();
  estimate->add_option("--n0", s.genetic.n0, "Genetic kinds: initial type-H count")
      ->capture_default_str();
  add_time_flags(estimate, s.times);
  add_mc_flags(estimate, s.mc);
  add_output_flags(estimate, s.out);
  estimate
      ->add_option("--kind", s.kind,
                   "mean, variance, extinction, state-pmf, joint-cf, path-integral-mean, "
                   "laplace-q, genetic-mean or genetic-path-integral-mean")
      ->capture_default_str();
  estimate->add_option("-n,--n", s.state, "State for state-pmf")->capture_default_str();
  estimate->add_option("--u", s.u, "joint-cf argument of N")->capture_default_str();
  estimate->add_option("--v", s.v, "joint-cf argument of the path integral")->capture_default_str();
  estimate->add_option("--z", s.z, "laplace-q argument")->capture_default_str();
  estimate->callback([&sub] { sub = "estimate"; });

  CLI::App* paths = simulate->add_subcommand("paths", "Dump time-changed sample paths");
  add_process_flags(paths, s.process);
  add_time_flags(paths, s.times);
  add_mc_flags(paths, s.mc);
  add_output_flags(paths, s.out);
  paths->add_option("-n,--n", s.n_paths_dump, "Number of paths")->capture_default_str();
  paths->callback([&sub] { sub = "paths"; });

  CLI::App* genetic = app.add_subcommand("genetic", "Bounded two-type (genetic) model");
  genetic->require_subcommand(1);
  for (const char* name : {"mean", "avg", "path-integral-mean", "simulate"}) {
    CLI::App* c = genetic->add_subcommand(name, std::string("genetic ") + name);
    add_genetic_flags(c, s.genetic);
    add_time_flags(c, s.times);
    add_output_flags(c, s.out);
    const std::string n(name);
    if (n == "avg") c->add_flag("--asymptotic", s.asymptotic, "Use the large-t approximation");
    if (n == "simulate") {
      add_mc_flags(c, s.mc);
      c->add_flag("--integral", s.integral, "Estimate the path-integral mean instead");
    }
    c->callback([&sub, n] { sub = n; });
  }

  CLI::App* verify = app.add_subcommand("verify", "Cross-validation suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "reductions, laplace, pde, asymptotics, figures or all")
      ->check(CLI::IsMember({"reductions", "laplace", "pde", "asymptotics", "figures", "all"}))
      ->capture_default_str();
  verify->add_option("--csv-dir", s.csv_dir, "Directory for figure CSV files");
  add_output_flags(verify, s.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ml->parsed()) return cmd_ml(s, out);
    if (analytics->parsed()) return cmd_analytics(sub, s, out);
    if (estimate->parsed()) return cmd_simulate_estimate(s, out, err);
    if (paths->parsed()) return cmd_simulate_paths(s, out);
    if (genetic->parsed()) return cmd_genetic(sub, s, out, err);
    if (verify->parsed()) return cmd_verify(suite, s, out);
    err << "no command given\n";
    return kExitUsage;
  } catch (const UnsupportedRegimeError& e) {
    err << "unsupported simulation regime: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const HorizonError& e) {
    err << "simulation cap exceeded: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivergenceError& e) {
    err << "series divergence: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace gflbdp::cli
