#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ccr/csv.hpp"
#include "ccr/heisenberg.hpp"
#include "ccr/parse.hpp"
#include "ccr/pathint.hpp"
#include "ccr/propagator.hpp"
#include "ccr/verify.hpp"

namespace ccr::cli {

void RunConfig::validate() const {
  if (!(mass > 0.0)) throw std::invalid_argument("--m must be positive");
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  if (!(t_total > 0.0)) throw std::invalid_argument("--t must be positive");
  if (!(x_max > x_min)) throw std::invalid_argument("--xmax must exceed --xmin");
  if (!(sigma > 0.0)) throw std::invalid_argument("--sigma must be positive");
  if (model != "free" && model != "harmonic" && model != "linear" && model != "custom")
    throw std::invalid_argument("unknown --model '" + model + "'");
  if (model == "harmonic" && !(omega > 0.0)) throw std::invalid_argument("--omega must be positive");
  if (model == "custom" && !force) throw std::invalid_argument("--model custom needs --force");
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": empty key");
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

namespace {

ParamValues params_of(const RunConfig& c) { return {{"F0", c.force0}, {"m", c.mass}, {"omega", c.omega}}; }

Polynomial polynomial_in(const std::string& text, Symbol s, const char* what) {
  auto q = as_polynomial(normal_order(parse_expression(text)), s);
  if (!q) throw std::invalid_argument(std::string(what) + " must be a polynomial in " + (s == Symbol::X ? "X" : "P"));
  return *q;
}

ForceLaw force_law(const RunConfig& c) {
  if (c.force) return {polynomial_in(*c.force, Symbol::X, "--force"), "custom"};
  if (c.model == "harmonic") return harmonic_force();
  if (c.model == "linear") return constant_force();
  return free_force();
}

AffineFlowExact exact_flow(const RunConfig& c) {
  switch (parse_flow_model(c.model)) {
    case FlowModel::Free:
      return AffineFlowExact::free(c.mass);
    case FlowModel::Harmonic:
      return AffineFlowExact::harmonic(c.mass, c.omega);
    case FlowModel::Linear:
      return AffineFlowExact::linear(c.mass, c.force0);
  }
  throw std::logic_error("unreachable");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

void add_physics_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--model", c.model, "free | harmonic | linear | custom");
  sub->add_option("--m", c.mass, "mass");
  sub->add_option("--omega", c.omega, "harmonic angular frequency");
  sub->add_option("--F0", c.force0, "constant force");
}

void add_grid_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--xmin", c.x_min, "grid start");
  sub->add_option("--xmax", c.x_max, "grid end");
  sub->add_option("--n", c.n, "grid points");
}

void add_packet_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--x0", c.x0, "packet centre");
  sub->add_option("--p0", c.p0, "packet momentum");
  sub->add_option("--sigma", c.sigma, "packet width");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string expr_a, expr_b, verify_out;

  CLI::App app{"Exact [X,P] = i operator algebra, Heisenberg flows and propagators", "ccr"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto* normord = app.add_subcommand("normord", "print the normal-ordered form of an expression");
  normord->add_option("expr", expr_a, "operator expression")->required();

  auto* comm = app.add_subcommand("comm", "print [A,B] normal-ordered");
  comm->add_option("a", expr_a, "first expression")->required();
  comm->add_option("b", expr_b, "second expression")->required();

  auto* series = app.add_subcommand("series", "Taylor coefficients of X(t) and P(t)");
  add_physics_options(series, cfg);
  series->add_option("--order", cfg.order, "truncation order K");
  series->add_option("--force", cfg.force, "force polynomial in X (overrides --model)");
  series->add_option("--velocity", cfg.velocity, "velocity polynomial in P (default m^-1*P)");
  series->add_option("--out", cfg.output, "output file");

  auto* kernel = app.add_subcommand("kernel", "CSV of U(x_b, x_a) on a grid");
  add_physics_options(kernel, cfg);
  add_grid_options(kernel, cfg);
  kernel->add_option("--t", cfg.t_total, "time");
  kernel->add_option("--out", cfg.output, "output file");
  bool coefficients_only = false;
  kernel->add_flag("--coefficients", coefficients_only, "print only (a, b, c, d, e, A)");

  auto* evolve = app.add_subcommand("evolve", "evolve a Gaussian packet with the exact kernel");
  add_physics_options(evolve, cfg);
  add_grid_options(evolve, cfg);
  add_packet_options(evolve, cfg);
  evolve->add_option("--t", cfg.t_total, "time");
  evolve->add_option("--out", cfg.output, "output CSV of psi(t)");

  auto* pathint = app.add_subcommand("pathint", "time-sliced path integral with a convergence report");
  add_physics_options(pathint, cfg);
  add_grid_options(pathint, cfg);
  add_packet_options(pathint, cfg);
  pathint->add_option("--force", cfg.force, "force polynomial in X (overrides --model)");
  pathint->add_option("--t", cfg.t_total, "total time");
  pathint->add_option("--N", cfg.steps, "comma-separated slice counts, increasing")->delimiter(',')->expected(1, -1);
  pathint->add_option("--out", cfg.output, "output CSV of psi at the largest N");
  pathint->add_option("--report", cfg.report, "output CSV of the convergence report");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--out", verify_out, "report file");

  // A `--config FILE` of key = value lines supplies defaults; flags on the
  // command line come later and win under TakeLast.
  std::vector<std::string> args;
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < raw_args.size(); ++i) {
    const std::string& a = raw_args[i];
    if (a == "--config" && i + 1 < raw_args.size()) {
      config_path = raw_args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      args.push_back(a);
    }
  }

  try {
    if (config_path && !args.empty()) {
      const CLI::App* sub = app.get_subcommand_no_throw(args[0]);
      if (sub == nullptr) throw std::invalid_argument("--config needs a subcommand first");
      std::vector<std::string> merged{args[0]};
      for (const auto& [key, value] : read_config_file(*config_path)) {
        if (sub->get_option_no_throw("--" + key) == nullptr)
          throw std::invalid_argument("config key '" + key + "' is not an option of '" + args[0] + "'");
        merged.push_back("--" + key + "=" + value);
      }
      merged.insert(merged.end(), args.begin() + 1, args.end());
      args = std::move(merged);
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (normord->parsed()) {
      out << normal_order(parse_expression(expr_a)).to_string() << "\n";
      return kOk;
    }
    if (comm->parsed()) {
      out << commutator(parse_expression(expr_a), parse_expression(expr_b)).to_string() << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      const VerifyReport report = run_verification();
      emit(report.to_string(), verify_out, out);
      return report.passed() ? kOk : kVerificationFailed;
    }

    if (cfg.force && !series->parsed() && !pathint->parsed())
      throw std::invalid_argument("--force applies to series and pathint only");
    if (cfg.force && cfg.model == "free") cfg.model = "custom";
    cfg.validate();

    if (series->parsed()) {
      const VelocityLaw v = cfg.velocity ? VelocityLaw{polynomial_in(*cfg.velocity, Symbol::P, "--velocity")}
                                         : newtonian_velocity();
      const ForceLaw f = force_law(cfg);
      const Generator g = generator(f, v);
      std::string text = "# G = " + g.expr.to_string() + "\n";
      text += "# X(t) = sum_k c_k t^k/k!\n" + taylor_flow(OpExpr::x(), g, cfg.order).to_string();
      text += "# P(t) = sum_k c_k t^k/k!\n" + taylor_flow(OpExpr::p(), g, cfg.order).to_string();
      emit(text, cfg.output, out);
      return kOk;
    }
    if (kernel->parsed()) {
      const GaussianKernel k = gaussian_kernel(exact_flow(cfg), cfg.t_total);
      const Grid grid = Grid::span(cfg.x_min, cfg.x_max, cfg.n);
      emit(coefficients_only ? csv::kernel_coefficients(k) : csv::kernel_table(k, grid), cfg.output, out);
      return kOk;
    }
    if (evolve->parsed()) {
      const Grid grid = Grid::span(cfg.x_min, cfg.x_max, cfg.n);
      const WaveFunction psi = gaussian_packet(grid, cfg.x0, cfg.p0, cfg.sigma);
      if (edge_mass_fraction(psi) > kBoundaryMassLimit) err << "warning: initial packet touches the grid boundary\n";
      const WaveFunction result = evolve_exact(gaussian_kernel(exact_flow(cfg), cfg.t_total), psi);
      emit(csv::wavefunction(result), cfg.output, out);
      return kOk;
    }
    if (pathint->parsed()) {
      const ForceLaw f = force_law(cfg);
      const RealPolynomial force{f.force.numeric(params_of(cfg))};
      const Grid grid = Grid::span(cfg.x_min, cfg.x_max, cfg.n);
      const WaveFunction psi = gaussian_packet(grid, cfg.x0, cfg.p0, cfg.sigma);
      const ConvergenceReport report = convergence_study(force, cfg.mass, psi, cfg.t_total, cfg.steps);
      const unsigned finest = cfg.steps.back();
      const Propagation last =
          propagate(short_time_matrix(force, cfg.mass, cfg.t_total / finest, grid), psi, finest);
      if (last.boundary_leak()) err << "warning: boundary leak, edge mass fraction " << last.max_edge_fraction << "\n";
      std::string text = "# reference " + report.reference + "\n" + report.to_csv();
      if (report.asymptotic_from) text += "# asymptotic from N=" + std::to_string(*report.asymptotic_from) + "\n";
      emit(text, cfg.report, out);
      if (!cfg.output.empty()) emit(csv::wavefunction(last.psi), cfg.output, out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace ccr::cli
