// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "ccr/heisenberg.hpp"
#include "ccr/pathint.hpp"
#include "ccr/propagator.hpp"
#include "ccr/random.hpp"
#include "cli.hpp"

using namespace ccr;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    r.passed = false;
    r.detail += " (over time limit)";
  }
  if (!r.passed) ++failures;
  std::printf("[%s] %s %s: %s [%.2fs", r.passed ? "PASS" : "FAIL", id, title, r.detail.c_str(), secs);
  if (limit_s > 0) std::printf(" / limit %.0fs", limit_s);
  std::printf("]\n");
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ScalarCoeff par(const char* name, int power = 1) { return ScalarCoeff::param(name, power); }

Generator model_generator(int model) {
  const ForceLaw f = model == 0 ? free_force() : model == 1 ? harmonic_force() : constant_force();
  return generator(f, newtonian_velocity());
}

Outcome derivative_rules() {
  RandomAlgebra rnd(1001);
  const OpExpr x = OpExpr::x(), p = OpExpr::p();
  const ScalarCoeff i = ScalarCoeff::i();
  int bad = 0;
  for (int k = 0; k < 200; ++k) {
    const Polynomial q = rnd.polynomial(static_cast<unsigned>(rnd.below(9)));
    if (commutator(q.as_operator(Symbol::X), p) != i * q.derivative().as_operator(Symbol::X)) ++bad;
    if (commutator(q.as_operator(Symbol::P), x) != -i * q.derivative().as_operator(Symbol::P)) ++bad;
  }
  return {bad == 0, "400 commutators, " + std::to_string(bad) + " mismatches"};
}

Outcome oracle_equivalence() {
  RandomAlgebra rnd(1002);
  int bad = 0;
  for (int k = 0; k < 500; ++k) {
    const OpExpr e = rnd.expr(6, 6);
    const Polynomial q = rnd.polynomial(static_cast<unsigned>(rnd.below(9)), true);
    if (!(apply_to_polynomial(e, q) == apply_to_polynomial(normal_order(e), q))) ++bad;
  }
  return {bad == 0, "500 expressions, " + std::to_string(bad) + " mismatches"};
}

Outcome heisenberg_consistency() {
  const Generator g = model_generator(0);
  const OpExpr x = OpExpr::x(), p = OpExpr::p();
  int bad = 0;
  for (unsigned n = 1; n <= 8; ++n) {
    const OpExpr d = time_derivative(power(x, n), g);
    OpExpr chain;
    for (unsigned j = 0; j < n; ++j) chain += multiply(multiply(power(x, j), p), power(x, n - 1 - j));
    chain *= par("m", -1);
    const auto forms = free_power_derivative_forms(n);
    for (const OpExpr* f : std::initializer_list<const OpExpr*>{&chain, &forms.chain_rule, &forms.p_left, &forms.p_right, &forms.averaged})
      if (!equals(*f, d)) ++bad;
  }
  return {bad == 0, "n=1..8, five forms each, " + std::to_string(bad) + " mismatches"};
}

Outcome flow_correctness() {
  constexpr unsigned K = 12;
  const OpExpr x = OpExpr::x(), p = OpExpr::p();
  const auto s = taylor_flow(x, model_generator(1), K);
  bool closed = true;
  for (unsigned k = 0; k <= K; ++k) {
    const long sign = (k / 2) % 2 == 0 ? 1 : -1;
    const OpExpr want = k % 2 == 0 ? ScalarCoeff(sign) * par("omega", static_cast<int>(k)) * x
                                   : ScalarCoeff(sign) * par("omega", static_cast<int>(k) - 1) * par("m", -1) * p;
    closed = closed && s.coeffs[k].terms() == want.terms();
  }
  bool ccr = true;
  for (int model = 0; model < 3; ++model) {
    const Generator g = model_generator(model);
    const auto c = series_commutator(taylor_flow(x, g, K), taylor_flow(p, g, K));
    ccr = ccr && c.coeffs[0].terms() == OpExpr(ScalarCoeff::i()).terms();
    for (unsigned k = 1; k <= K; ++k) ccr = ccr && c.coeffs[k].is_zero();
  }
  std::ostringstream out, err;
  cli::run({"verify"}, out, err);
  const std::string report = out.str();
  const bool documented = report.find("[PASS] printed P0 sin(wt)/(m w^2) violates the CCR") != std::string::npos &&
                          report.find("note: harmonic X(t) uses P0 sin(wt)/(m w)") != std::string::npos;
  return {closed && ccr && documented, std::string("closed form ") + (closed ? "exact" : "MISMATCH") + ", CCR " +
                                           (ccr ? "exact through K=12 for 3 models" : "BROKEN") +
                                           ", m w^2 discrepancy " + (documented ? "documented" : "NOT documented")};
}

Outcome propagator_anchors() {
  std::mt19937_64 rng(1005);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), ut(0.1, 2.8);
  const AffineFlowExact flows[] = {AffineFlowExact::free(1.3), AffineFlowExact::harmonic(0.9, 1.1),
                                   AffineFlowExact::linear(1.1, -0.8)};
  double worst = 0;
  for (const auto& f : flows)
    for (int k = 0; k < 1000; ++k) {
      const double t = ut(rng), xb = ux(rng), xa = ux(rng);
      const Complex a = gaussian_kernel(f, t)(xb, xa), b = closed_form_kernel(f, t, xb, xa);
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
  double limit = 0;
  const double m = 1.0, t = 1.0;
  for (double xb : {-2.0, -0.5, 0.0, 1.0, 2.5})
    for (double xa : {-1.5, 0.0, 0.7}) {
      const Complex h = closed_form_kernel(AffineFlowExact::harmonic(m, 1e-4 / t), t, xb, xa);
      const Complex f = closed_form_kernel(AffineFlowExact::free(m), t, xb, xa);
      limit = std::max(limit, std::abs(h - f) / std::abs(f));
    }
  return {worst < 1e-12 && limit < 1e-6,
          "3000 points max rel " + fmt("%.2e", worst) + ", omega t=1e-4 limit rel " + fmt("%.2e", limit)};
}

Outcome wavepacket_physics() {
  std::string detail;
  bool ok = true;
  {
    const Grid g = Grid::span(-12, 12, 1024);
    const double s = 1.0, m = 1.0, t = 1.0;
    const auto out = evolve_exact(gaussian_kernel(AffineFlowExact::free(m), t), gaussian_packet(g, 0, 0, s));
    const double err = std::abs(packet_width(out) - s * std::sqrt(1 + t * t / (m * m * s * s * s * s)));
    ok = ok && err < 1e-6;
    detail += "free width err " + fmt("%.1e", err);
  }
  {
    const Grid g = Grid::span(-10, 10, 1024);
    const double m = 1.0, w = 1.0, x0 = 1.0, p0 = 0.5, t = pi / 2;
    const auto out = evolve_exact(gaussian_kernel(AffineFlowExact::harmonic(m, w), t), gaussian_packet(g, x0, p0, 1));
    const double ex = std::abs(mean_position(out) - (x0 * std::cos(w * t) + p0 / (m * w) * std::sin(w * t)));
    const double ep = std::abs(mean_momentum(out) - (p0 * std::cos(w * t) - m * w * x0 * std::sin(w * t)));
    ok = ok && ex < 1e-6 && ep < 1e-6;
    detail += ", harmonic <x>,<p> err " + fmt("%.1e", ex) + "," + fmt("%.1e", ep);
  }
  {
    const Grid g = Grid::span(-10, 10, 1024);
    const double m = 1.0, f0 = 1.0, x0 = -0.5, p0 = 0.3, t = 1.0;
    const auto out = evolve_exact(gaussian_kernel(AffineFlowExact::linear(m, f0), t), gaussian_packet(g, x0, p0, 1));
    const double ex = std::abs(mean_position(out) - (x0 + p0 * t / m + f0 * t * t / (2 * m)));
    const double ep = std::abs(mean_momentum(out) - (p0 + f0 * t));
    ok = ok && ex < 1e-6 && ep < 1e-6;
    detail += ", linear <x>,<p> err " + fmt("%.1e", ex) + "," + fmt("%.1e", ep);
  }
  return {ok, detail + " (n=1024)"};
}

Outcome pathint_convergence() {
  struct Case {
    const char* name;
    RealPolynomial force;
    double x0, t;
    std::vector<unsigned> steps;
  };
  const Grid g = Grid::span(-6, 6, 1024);
  const Case cases[] = {{"harmonic", RealPolynomial{{0.0, -1.0}}, 0.5, 3.0, {4, 8, 16, 32}},
                        {"linear", RealPolynomial{{1.0}}, -0.5, 1.0, {2, 4, 8}}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto rep = convergence_study(c.force, 1.0, gaussian_packet(g, c.x0, 0.0, 1.0), c.t, c.steps);
    bool monotone = true, in_band = true, leak = false;
    std::string ratios;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      leak = leak || rep.rows[i].boundary_leak;
      if (i == 0) continue;
      monotone = monotone && rep.rows[i].l2_error < rep.rows[i - 1].l2_error;
      ratios += (ratios.empty() ? "" : "/") + fmt("%.2f", *rep.rows[i].ratio);
    }
    const double last_ratio = *rep.rows.back().ratio;
    in_band = last_ratio >= kRichardsonLow && last_ratio <= kRichardsonHigh && rep.asymptotic_from.has_value();
    const double final_err = rep.rows.back().l2_error;
    ok = ok && monotone && in_band && !leak && final_err < 1e-3 && rep.reference == std::string("closed-form:") + c.name;
    if (!detail.empty()) detail += "; ";
    detail += std::string(c.name) + " ratios " + ratios + " final " + fmt("%.2e", final_err) +
              (monotone ? "" : " NOT MONOTONE") + (leak ? " LEAK" : "");
  }
  return {ok, detail};
}

Outcome determinism() {
  std::ostringstream a, b, err;
  const int ca = cli::run({"verify"}, a, err);
  const int cb = cli::run({"verify"}, b, err);
  const bool same = a.str() == b.str() && !a.str().empty();
  return {same && ca == 0 && cb == 0,
          std::string(same ? "byte-identical" : "DIFFERENT") + " reports, " + std::to_string(a.str().size()) + " bytes"};
}

}  // namespace

int main() {
  criterion("AC1", "symbolic derivative rules", 5, derivative_rules);
  criterion("AC2", "oracle equivalence", 10, oracle_equivalence);
  criterion("AC3", "Heisenberg consistency", 0, heisenberg_consistency);
  criterion("AC4", "flow correctness", 0, flow_correctness);
  criterion("AC5", "propagator anchors", 0, propagator_anchors);
  criterion("AC6", "wavepacket physics", 30, wavepacket_physics);
  criterion("AC7", "path-integral convergence", 120, pathint_convergence);
  criterion("AC8", "determinism", 0, determinism);
  std::printf("%s: %d failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
