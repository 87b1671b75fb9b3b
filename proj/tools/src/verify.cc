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

#include "gflbdp_cli/verify.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "gflbdp/gflbdp.h"

namespace gflbdp::cli {
namespace {

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string describe(const ProcessParams& p) {
  std::ostringstream os;
  os << "lambda=" << p.lambda << " mu=" << p.mu << " alpha=" << p.alpha
     << " beta=" << p.beta << " gamma=" << p.gamma << " rho=" << p.rho;
  return os.str();
}

// Collects checks; a throwing measurement becomes a failed check.
class Report {
 public:
  void check(const std::string& name, double tolerance,
             const std::function<double()>& measure) {
    CheckResult r;
    r.name = name;
    r.tolerance = tolerance;
    try {
      r.error = measure();
      r.passed = r.error <= tolerance;
    } catch (const std::exception& e) {
      r.error = std::numeric_limits<double>::infinity();
      r.note = e.what();
    }
    results_.push_back(std::move(r));
  }

  // Boolean property; error is 0 on success and 1 otherwise.
  void expect(const std::string& name, const std::function<bool()>& predicate,
              const std::string& note = {}) {
    check(name, 0.0, [&] { return predicate() ? 0.0 : 1.0; });
    if (results_.back().note.empty()) results_.back().note = note;
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

ProcessParams make(double lambda, double mu, double alpha, double beta, double gamma,
                   double rho) {
  ProcessParams p;
  p.lambda = lambda;
  p.mu = mu;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.rho = rho;
  return p;
}

std::vector<CheckResult> reductions() {
  Report rep;
  rep.check("classical extinction lambda=mu=1 t=1 equals 1/2", 1e-10, [] {
    return std::fabs(extinction_prob(make(1, 1, 0.5, 1, 0, 1), 1.0) - 0.5);
  });
  rep.check("classical p_1 lambda=mu=1 t=1 equals 1/4", 1e-10, [] {
    return std::fabs(state_prob(make(1, 1, 0.5, 1, 0, 1), 1, 1.0) - 0.25);
  });
  for (auto [l, m] : {std::pair{2.0, 1.0}, {1.0, 2.0}, {1.0, 1.0}}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const ProcessParams p = make(l, m, 0.5, 1, 0, 1);
      const std::string tag = " lambda=" + fmt(l) + " mu=" + fmt(m) + " t=" + fmt(t);
      rep.check("gamma=0 rho=1 extinction vs closed form" + tag, 1e-10, [&] {
        return rel_diff(extinction_prob(p, t), classical_extinction(l, m, t));
      });
      rep.check("gamma=0 rho=1 p_1..p_3 vs closed form" + tag, 1e-9, [&] {
        double worst = 0.0;
        for (int n = 1; n <= 3; ++n) {
          worst = std::max(worst, rel_diff(state_prob(p, n, t),
                                           classical_state_prob(n, l, m, t)));
        }
        return worst;
      });
    }
  }
  for (double t : {0.1, 1.0, 2.0}) {
    rep.check("gamma=0 rho=1 mean equals exp((lambda-mu)t) t=" + fmt(t), 1e-9, [&] {
      return rel_diff(mean_gflbdp(make(2, 1, 0.5, 1, 0, 1), t), std::exp(t));
    });
  }
  for (double rho : {0.6, 0.8, 1.0}) {
    for (double t : {0.5, 1.0}) {
      const ProcessParams p = make(2, 1, 0.5, 1, 0, rho);
      const std::string tag = " rho=" + fmt(rho) + " t=" + fmt(t);
      rep.check("gamma=0 mean equals E_rho((lambda-mu)t^rho)" + tag, 1e-9, [&] {
        return rel_diff(mean_gflbdp(p, t), mittag_leffler(rho, 1.0, std::pow(t, rho)));
      });
      rep.check("gamma=0 variance vs Mittag-Leffler closed form" + tag, 1e-8, [&] {
        const double a = p.lambda - p.mu;
        const double e1 = mittag_leffler(rho, 1.0, a * std::pow(t, rho));
        const double e2 = mittag_leffler(rho, 1.0, 2.0 * a * std::pow(t, rho));
        const double expected = 2.0 * p.lambda / a * e2 -
                                (p.lambda + p.mu) / a * e1 - e1 * e1;
        return rel_diff(variance_gflbdp(p, t), expected);
      });
    }
  }
  rep.check("gamma=0 rho=1 variance vs exponential closed form t=1", 1e-9, [] {
    const double e = std::exp(1.0);
    return rel_diff(variance_gflbdp(make(2, 1, 0.5, 1, 0, 1), 1.0), 3.0 * e * (e - 1.0));
  });
  rep.check("gamma=0 rho=1 joint CF vs classical (u,v,t)=(0.5,0.3,1)", 1e-6, [] {
    const auto a = joint_cf_gflbdp(0.5, 0.3, make(1, 0.5, 0.5, 1, 0, 1), 1.0);
    return std::abs(a - joint_cf_classical(0.5, 0.3, 1, 0.5, 1.0));
  });
  rep.check("classical joint CF at v=0 equals pgf (u=pi, lambda=mu=1, t=1)", 1e-12, [] {
    // E(-1)^N = p_0 + sum_n (-1)^n p_n = 1/3 for lambda = mu = 1, t = 1.
    return std::abs(joint_cf_classical(std::numbers::pi, 0.0, 1, 1, 1.0) - 1.0 / 3.0);
  });
  rep.check("plain integral of the classical mean equals e^t - 1 (t=1)", 1e-8, [] {
    PrabhakarIntegralParams ip;
    ip.gamma_p = 0.0;
    return rel_diff(mean_prabhakar_integral(make(2, 1, 0.5, 1, 0, 1), ip, 1.0),
                    std::exp(1.0) - 1.0);
  });
  rep.check("genetic mean started at equilibrium stays constant", 1e-12, [] {
    GeneticParams gp;
    gp.M = 10;
    gp.n0 = 5;
    gp.rho = 0.7;
    return std::fabs(genetic_mean(gp, 3.0) - 5.0);
  });
  return rep.take();
}

struct GridPoint {
  double alpha, gamma, rho;
};

std::vector<CheckResult> laplace() {
  Report rep;
  const GridPoint grid[] = {{0.5, 0.0, 0.6}, {0.5, 0.0, 0.8}, {0.5, 0.0, 1.0},
                            {0.5, 0.4, 0.3}, {0.8, 0.4, 0.35}, {0.3, 0.4, 0.2},
                            {0.5, 0.9, 0.8}, {0.7, 0.9, 0.6}, {0.3, 0.9, 0.5}};
  const std::pair<double, double> regimes[] = {{0.5, 1.0}, {1.0, 1.0}, {2.0, 1.0}};
  constexpr double kTol = 1e-5;
  for (const auto& g : grid) {
    for (double t : {0.5, 1.0, 2.0}) {
      const ProcessParams p = make(2.0, 1.0, g.alpha, 1.0, g.gamma, g.rho);
      const std::string tag = " [" + describe(p) + " t=" + fmt(t) + "]";
      rep.check("mean series vs Gaver-Stehfest" + tag, kTol, [&] {
        return rel_diff(mean_gflbdp(p, t), laplace_route::mean(p, t));
      });
      rep.check("survival series vs Gaver-Stehfest c=1.5" + tag, kTol, [&] {
        return rel_diff(survival_interarrival(p, 1.5, t), laplace_route::survival(p, 1.5, t));
      });
      rep.check("extinction series vs Gaver-Stehfest, three regimes" + tag, kTol, [&] {
        double worst = 0.0;
        for (auto [l, m] : regimes) {
          ProcessParams q = p;
          q.lambda = l;
          q.mu = m;
          worst = std::max(worst, rel_diff(extinction_prob(q, t), laplace_route::extinction(q, t)));
        }
        return worst;
      });
    }
  }
  return rep.take();
}

// Residual of D p_n = lambda (n-1) p_{n-1} - (lambda+mu) n p_n + mu (n+1) p_{n+1}
// with D the regularized Hilfer-Prabhakar derivative, relative to the sum of
// the magnitudes of the right-hand terms.
std::vector<CheckResult> pde() {
  Report rep;
  const ProcessParams p = make(1.0, 0.5, 0.5, 1.0, 0.4, 0.3);
  const std::vector<double> grid = residual_grid(2.0, 200);
  const std::vector<double> probe = {0.2, 0.35, 0.5, 0.8, 1.0, 1.4, 2.0};
  std::vector<SampledFunction> pn;
  try {
    for (int n = 0; n <= 3; ++n) {
      pn.push_back(SampledFunction::sample(
          [&](double t) {
            if (t == 0.0) return n == 1 ? 1.0 : 0.0;
            return n == 0 ? extinction_prob(p, t) : state_prob(p, n, t);
          },
          grid));
    }
  } catch (const std::exception& e) {
    rep.check("state probabilities on the residual grid", 0.0,
              [&]() -> double { throw Error(e.what()); });
    return rep.take();
  }
  for (int n = 0; n <= 2; ++n) {
    rep.check("governing equation residual n=" + std::to_string(n) + " on [0.2,2] [" +
                  describe(p) + "]",
              1e-2, [&] {
                double worst = 0.0;
                for (double t : probe) {
                  const double lhs = rhp_derivative_apply(pn[n], p, t);
                  const double in = n >= 1 ? p.lambda * (n - 1) * pn[n - 1](t) : 0.0;
                  const double stay = (p.lambda + p.mu) * n * pn[n](t);
                  const double out = p.mu * (n + 1) * pn[n + 1](t);
                  const double scale = std::fabs(in) + std::fabs(stay) + std::fabs(out);
                  worst = std::max(worst, std::fabs(lhs - (in - stay + out)) / scale);
                }
                return worst;
              });
  }
  rep.check("mean equation D m = (lambda-mu) m on [0.2,2] [" + describe(p) + "]", 1e-3, [&] {
    const SampledFunction m = SampledFunction::sample(
        [&](double t) { return mean_gflbdp(p, t); }, grid);
    double worst = 0.0;
    for (double t : probe) {
      const double rhs = (p.lambda - p.mu) * m(t);
      worst = std::max(worst, std::fabs(rhp_derivative_apply(m, p, t) - rhs) / std::fabs(rhs));
    }
    return worst;
  });
  return rep.take();
}

std::vector<CheckResult> asymptotics() {
  Report rep;
  constexpr double kT = 1e3;
  for (auto [l, m] : {std::pair{1.0, 0.5}, {1.0, 1.0}, {2.0, 1.0}}) {
    const ProcessParams p = make(l, m, 0.5, 1.0, 0.9, 0.8);
    rep.check("asymptotic extinction at t=1000 within 2% [" + describe(p) + "]", 2e-2, [&] {
      return rel_diff(asymptotic_extinction(p, kT), extinction_prob(p, kT));
    });
    rep.check("asymptotic p_1 at t=1000 within 2% [" + describe(p) + "]", 2e-2, [&] {
      return rel_diff(asymptotic_state_prob(p, 1, kT), state_prob(p, 1, kT));
    });
  }
  rep.check("genetic average type-H asymptotic form at t=1000 (rho=0.7)", 2e-2, [] {
    GeneticParams gp;
    gp.M = 10;
    gp.n0 = 2;
    gp.rho = 0.7;
    return rel_diff(genetic_avg_type_h_asymptotic(gp, kT), genetic_avg_type_h(gp, kT));
  });
  rep.check("genetic mean tends to M lambda/(lambda+mu) (rho=1, t=20)", 1e-8, [] {
    GeneticParams gp;
    gp.M = 10;
    gp.n0 = 2;
    gp.lambda = 1.0;
    gp.mu = 3.0;
    return rel_diff(genetic_mean(gp, 20.0), gp.stationary_mean());
  });
  return rep.take();
}

std::vector<double> figure_grid() {
  std::vector<double> t(51);
  for (int i = 0; i <= 50; ++i) t[i] = 0.1 * i;
  return t;
}

bool strictly_decreasing(const std::vector<FigureSeries>& s, std::size_t idx) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!(s[k].mean[idx] < s[k - 1].mean[idx])) return false;
  }
  return true;
}

std::vector<CheckResult> figures(const SuiteOptions& opts) {
  Report rep;
  const std::vector<double> t = figure_grid();
  std::vector<FigureSeries> f1, f2;
  rep.check("figure 1 curves evaluate on t in [0,5]", 0.0, [&] {
    f1 = figure1_series(t);
    return 0.0;
  });
  rep.check("figure 2 curves evaluate on t in [0,5]", 0.0, [&] {
    f2 = figure2_series(t);
    return 0.0;
  });
  if (!f1.empty()) {
    rep.expect("figure 1: mean at t=5 strictly decreasing in rho (0.6, 0.8, 1.0)",
               [&] { return strictly_decreasing(f1, t.size() - 1); });
  }
  if (!f2.empty()) {
    rep.expect("figure 2: mean at t=5 strictly decreasing in beta (0.25, 0.5, 1.0)",
               [&] { return strictly_decreasing(f2, t.size() - 1); });
  }
  if (!opts.csv_dir.empty() && !f1.empty() && !f2.empty()) {
    rep.check("figure CSV files written to " + opts.csv_dir, 0.0, [&] {
      write_figure_csv(opts.csv_dir + "/fig1_mean.csv", t, f1);
      write_figure_csv(opts.csv_dir + "/fig2_mean.csv", t, f2);
      return 0.0;
    });
  }
  return rep.take();
}

std::vector<FigureSeries> series_over(const std::vector<double>& t_grid,
                                      const std::vector<ProcessParams>& params,
                                      const std::vector<std::string>& labels) {
  std::vector<FigureSeries> out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    FigureSeries s{labels[i], params[i], {}};
    for (double t : t_grid) s.mean.push_back(t == 0.0 ? 1.0 : mean_gflbdp(params[i], t));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"reductions", "laplace", "pde",
                                                 "asymptotics", "figures"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "reductions") return reductions();
  if (name == "laplace") return laplace();
  if (name == "pde") return pde();
  if (name == "asymptotics") return asymptotics();
  if (name == "figures") return figures(opts);
  throw DomainError("unknown verification suite '" + name + "'");
}

std::vector<FigureSeries> figure1_series(const std::vector<double>& t_grid) {
  std::vector<ProcessParams> ps;
  for (double rho : {0.6, 0.8, 1.0}) ps.push_back(make(2.0, 1.0, 0.5, 0.5, 0.0, rho));
  return series_over(t_grid, ps, {"rho_0.6", "rho_0.8", "rho_1.0"});
}

std::vector<FigureSeries> figure2_series(const std::vector<double>& t_grid) {
  std::vector<ProcessParams> ps;
  for (double beta : {0.25, 0.5, 1.0}) ps.push_back(make(2.0, 1.0, 0.5, beta, 0.8, 0.7));
  return series_over(t_grid, ps, {"beta_0.25", "beta_0.5", "beta_1.0"});
}

void write_figure_csv(const std::string& path, const std::vector<double>& t_grid,
                      const std::vector<FigureSeries>& series) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream os(path);
  if (!os) throw DomainError("cannot open '" + path + "' for writing");
  os << "t";
  for (const auto& s : series) os << ',' << s.label;
  os << '\n' << std::setprecision(12);
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    os << t_grid[i];
    for (const auto& s : series) os << ',' << s.mean[i];
    os << '\n';
  }
  if (!os) throw NumericError("write to '" + path + "' failed");
}

}  // namespace gflbdp::cli
