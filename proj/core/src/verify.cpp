#include "ccr/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "ccr/heisenberg.hpp"
#include "ccr/pathint.hpp"
#include "ccr/polynomial.hpp"
#include "ccr/propagator.hpp"
#include "ccr/random.hpp"

namespace ccr {

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::to_string() const {
  std::string out;
  for (const auto& c : checks) out += (c.passed ? "[PASS] " : "[FAIL] ") + c.name + ": " + c.detail + "\n";
  for (const auto& n : notes) out += "note: " + n + "\n";
  out += passed() ? "verify: all checks passed\n" : "verify: FAILED\n";
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct Counter {
  unsigned total = 0;
  unsigned failed = 0;
  void record(bool ok) {
    ++total;
    if (!ok) ++failed;
  }
  std::string summary() const { return std::to_string(total - failed) + "/" + std::to_string(total) + " cases"; }
};

Generator model_generator(const ForceLaw& f) { return generator(f, newtonian_velocity()); }

void symbolic_checks(VerifyReport& report, RandomAlgebra& rnd) {
  {
    const OpExpr px = multiply(OpExpr::p(), OpExpr::x());
    const OpExpr ppx = multiply(OpExpr::p(), px);
    const ScalarCoeff i = ScalarCoeff::i();
    OpExpr want_px = OpExpr(Word{Symbol::X, Symbol::P});
    want_px -= OpExpr(i);
    OpExpr want_ppx = OpExpr(Word::ordered(1, 2));
    want_ppx -= OpExpr(Word{Symbol::P}, ScalarCoeff(2) * i);
    const bool ok = normal_order(px).terms() == want_px.terms() && normal_order(ppx).terms() == want_ppx.terms();
    report.checks.push_back({"normal-order examples", ok, "PX -> " + normal_order(px).to_string()});
  }
  {
    Counter idem, oracle;
    for (int k = 0; k < 100; ++k) {
      const OpExpr e = rnd.expr(4, 6);
      const OpExpr n = normal_order(e);
      idem.record(n.is_normal_ordered() && normal_order(n).terms() == n.terms());
      const Polynomial q = rnd.polynomial(static_cast<unsigned>(rnd.below(9)));
      oracle.record(apply_to_polynomial(e, q) == apply_to_polynomial(n, q));
    }
    report.checks.push_back({"normal_order idempotent", idem.failed == 0, idem.summary()});
    report.checks.push_back({"differential-operator oracle", oracle.failed == 0, oracle.summary()});
  }
  {
    Counter xs, ps;
    for (int k = 0; k < 50; ++k) {
      const Polynomial q = rnd.polynomial(static_cast<unsigned>(rnd.below(9)));
      xs.record(commutator(q.as_operator(Symbol::X), OpExpr::p()) ==
                ScalarCoeff::i() * q.derivative().as_operator(Symbol::X));
      ps.record(commutator(q.as_operator(Symbol::P), OpExpr::x()) ==
                ScalarCoeff(Rational(0), Rational(-1)) * q.derivative().as_operator(Symbol::P));
    }
    report.checks.push_back({"[O(X),P] = i O'(X)", xs.failed == 0, xs.summary()});
    report.checks.push_back({"[O(P),X] = -i O'(P)", ps.failed == 0, ps.summary()});
  }
  {
    Counter jacobi, anti;
    for (int k = 0; k < 30; ++k) {
      const OpExpr a = rnd.expr(3, 3), b = rnd.expr(3, 3), c = rnd.expr(3, 3);
      const OpExpr j = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                       commutator(commutator(c, a), b);
      jacobi.record(normal_order(j).is_zero());
      const ScalarCoeff s = rnd.scalar();
      const bool antisym = commutator(a, b) == -commutator(b, a);
      const bool bilinear = commutator(s * a + b, c) == s * commutator(a, c) + commutator(b, c);
      anti.record(antisym && bilinear);
    }
    report.checks.push_back({"Jacobi identity", jacobi.failed == 0, jacobi.summary()});
    report.checks.push_back({"commutator antisymmetric and bilinear", anti.failed == 0, anti.summary()});
  }
  {
    const auto r = inverse_power_rule(2);
    report.checks.push_back({"[X^-n,P] rule", r.exponent == -3 && r.coefficient == ScalarCoeff(Rational(0), Rational(-2)),
                             "n=2 -> " + r.coefficient.to_string() + "*X^" + std::to_string(r.exponent)});
  }
}

void heisenberg_checks(VerifyReport& report, RandomAlgebra& rnd) {
  {
    Counter c;
    for (unsigned n = 1; n <= 8; ++n) {
      const auto f = free_power_derivative_forms(n);
      c.record(f.chain_rule == f.heisenberg && f.p_left == f.heisenberg && f.p_right == f.heisenberg &&
               f.averaged == f.heisenberg);
    }
    report.checks.push_back({"d/dt X^n: chain rule = P-left = P-right = average = i[G,X^n]", c.failed == 0,
                             "n = 1..8, " + c.summary()});
  }
  {
    Counter c;
    const Generator g = model_generator(harmonic_force());
    for (int k = 0; k < 20; ++k) {
      const OpExpr a = rnd.expr(3, 3), b = rnd.expr(3, 3);
      c.record(time_derivative(multiply(a, b), g) ==
               multiply(time_derivative(a, g), b) + multiply(a, time_derivative(b, g)));
    }
    report.checks.push_back({"time_derivative is a derivation", c.failed == 0, c.summary()});
  }
  {
    constexpr unsigned K = 12;
    const auto flow = extract_affine(taylor_flow(OpExpr::x(), model_generator(harmonic_force()), K));
    const bool ok = flow.alpha == harmonic_cosine_series(K) && flow.beta == harmonic_sine_series(K, 1) &&
                    std::all_of(flow.gamma.begin(), flow.gamma.end(), [](const auto& g) { return g.is_zero(); });
    report.checks.push_back({"harmonic X(t) = X0 cos(wt) + P0 sin(wt)/(m w)", ok, "K = 12"});
  }
  {
    constexpr unsigned K = 12;
    for (const ForceLaw& f : {free_force(), harmonic_force(), constant_force()}) {
      const Generator g = model_generator(f);
      const auto cx = series_commutator(taylor_flow(OpExpr::x(), g, K), taylor_flow(OpExpr::p(), g, K));
      bool ok = cx.coeffs[0] == OpExpr(ScalarCoeff::i());
      for (unsigned k = 1; k <= K; ++k) ok = ok && cx.coeffs[k].is_zero();
      report.checks.push_back({"[X(t),P(t)] = i order by order (" + f.label + ")", ok, "K = 12"});
    }
  }
  {
    // The printed harmonic solution carries P0 sin(wt)/(m w^2). Substitute it
    // into X(t) and find where the CCR first breaks.
    constexpr unsigned K = 6;
    const Generator g = model_generator(harmonic_force());
    AffineFlow printed;
    printed.alpha = harmonic_cosine_series(K);
    printed.beta = harmonic_sine_series(K, 2);
    printed.gamma.assign(K + 1, ScalarCoeff{});
    const auto cx = series_commutator(printed.reassemble(), taylor_flow(OpExpr::p(), g, K));
    unsigned first_bad = 0;
    std::string residual;
    for (unsigned k = 1; k <= K && first_bad == 0; ++k)
      if (!cx.coeffs[k].is_zero()) {
        first_bad = k;
        residual = cx.coeffs[k].to_string();
      }
    report.checks.push_back({"printed P0 sin(wt)/(m w^2) violates the CCR", first_bad != 0,
                             first_bad ? "t^" + std::to_string(first_bad) + "/" + std::to_string(first_bad) +
                                             "! coefficient of [X(t),P(t)] is " + residual
                                       : "no violation found"});
    report.notes.push_back(
        "harmonic X(t) uses P0 sin(wt)/(m w); the m w^2 denominator of the printed second line fails [X(t),P(t)] = i "
        "and is dimensionally inconsistent");
  }
  {
    bool caught = false;
    const ForceLaw cubic{Polynomial::monomial(3, ScalarCoeff(-1)), "cubic"};
    try {
      extract_affine(taylor_flow(OpExpr::x(), model_generator(cubic), 3));
    } catch (const NonAffineFlow&) {
      caught = true;
    }
    report.checks.push_back({"F = -X^3 is rejected as non-affine", caught, "NonAffineFlow"});
  }
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// |i dU/dx_a - ((x_b - alpha x_a - gamma)/beta) U| + the same in x_b, with
// central differences of step h, relative to |U|.
double kernel_relation_residual(const GaussianKernel& kern, double xb, double xa, double h) {
  const Complex u = kern(xb, xa);
  const Complex du_a = (kern(xb, xa + h) - kern(xb, xa - h)) / (2 * h);
  const Complex du_b = (kern(xb + h, xa) - kern(xb - h, xa)) / (2 * h);
  const Complex ra = Complex(0, 1) * du_a - ((xb - kern.alpha * xa - kern.gamma) / kern.beta) * u;
  const Complex rb = Complex(0, 1) * du_b - ((xa - kern.alpha * xb - kern.gamma) / kern.beta) * u;
  return (std::abs(ra) + std::abs(rb)) / std::abs(u);
}

void propagator_checks(VerifyReport& report, RandomAlgebra& rnd) {
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rnd.below(1u << 30)) / static_cast<double>(1u << 30);
  };
  const std::vector<AffineFlowExact> flows{AffineFlowExact::free(1.3), AffineFlowExact::harmonic(0.8, 1.7),
                                           AffineFlowExact::linear(1.1, 0.6)};
  for (const auto& flow : flows) {
    double worst = 0.0;
    double residual_h = 0.0, residual_h2 = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double tmax = flow.model == FlowModel::Harmonic ? (kPi - 0.05) / flow.omega : 3.0;
      const double t = uniform(0.05, tmax);
      const double xb = uniform(-4, 4), xa = uniform(-4, 4);
      const auto kern = gaussian_kernel(flow, t);
      worst = std::max(worst, rel(kern(xb, xa), closed_form_kernel(flow, t, xb, xa)));
      residual_h += kernel_relation_residual(kern, xb, xa, 2e-3);
      residual_h2 += kernel_relation_residual(kern, xb, xa, 1e-3);
    }
    const std::string name(to_string(flow.model));
    report.checks.push_back({"gaussian_kernel = closed form (" + name + ")", worst < 1e-12, "max rel " + sci(worst)});
    const double order_ratio = residual_h / residual_h2;
    report.checks.push_back({"kernel satisfies both first-order relations (" + name + ")",
                             order_ratio > 3.5 && order_ratio < 4.5,
                             "finite-difference residual ratio h -> h/2 " + sci(order_ratio)});
  }
  {
    const double m = 1.0, t = 1.0, w = 1e-4;
    const double e = rel(closed_form_kernel(AffineFlowExact::harmonic(m, w), t, 0.7, -0.4),
                         closed_form_kernel(AffineFlowExact::free(m), t, 0.7, -0.4));
    report.checks.push_back({"harmonic -> free as w t -> 0", e < 1e-6, "rel " + sci(e) + " at w t = 1e-4"});
  }
  {
    bool caught = false;
    try {
      gaussian_kernel(AffineFlowExact::harmonic(1.0, 1.0), kPi);
    } catch (const CausticSingularity&) {
      caught = true;
    }
    report.checks.push_back({"caustic at w t = pi rejected", caught, "CausticSingularity"});
  }
  {
    const Grid grid = Grid::span(-12.0, 12.0, 1024);
    const double sigma = 1.0, t = 1.0, m = 1.0;
    const auto psi = gaussian_packet(grid, 0.0, 0.0, sigma);
    const auto out = evolve_exact(gaussian_kernel(AffineFlowExact::free(m), t), psi);
    const double want = sigma * std::sqrt(1.0 + t * t / (m * m * std::pow(sigma, 4)));
    const double err = std::abs(packet_width(out) - want);
    const double dn = std::abs(norm(out) - norm(psi));
    report.checks.push_back({"free packet spreading", err < 1e-6 && dn < 1e-6,
                             "|sigma(t) - analytic| " + sci(err) + ", norm drift " + sci(dn)});
  }
  {
    const Grid grid = Grid::span(-10.0, 10.0, 1024);
    const double m = 1.0, w = 1.0, x0 = 1.0, p0 = 0.5;
    const auto flow = AffineFlowExact::harmonic(m, w);
    const auto psi = gaussian_packet(grid, x0, p0, 1.0 / std::sqrt(m * w));
    const double t = kPi / (2.0 * w);
    const auto out = evolve_exact(gaussian_kernel(flow, t), psi);
    const double ex = std::abs(mean_position(out) - p0 / (m * w));
    const double ep = std::abs(mean_momentum(out) + m * w * x0);
    report.checks.push_back({"harmonic Ehrenfest at w t = pi/2", ex < 1e-6 && ep < 1e-6,
                             "<x> err " + sci(ex) + ", <p> err " + sci(ep)});
  }
}

void pathint_checks(VerifyReport& report) {
  const Grid grid = Grid::span(-6.0, 6.0, 1024);
  struct Case {
    std::string name;
    RealPolynomial force;
    double t;
    double x0;
    std::vector<unsigned> steps;
  };
  const std::vector<Case> cases{{"harmonic", RealPolynomial{{0.0, -1.0}}, 3.0, 0.5, {4, 8, 16, 32}},
                                {"linear", RealPolynomial{{1.0}}, 1.0, -0.5, {2, 4, 8}}};
  for (const auto& c : cases) {
    const auto psi = gaussian_packet(grid, c.x0, 0.0, 1.0);
    const auto r = convergence_study(c.force, 1.0, psi, c.t, c.steps);
    std::string detail = r.reference + "; errors";
    bool decreasing = true;
    for (const auto& row : r.rows) {
      detail += " " + sci(row.l2_error);
      if (row.ratio && *row.ratio <= 1.0) decreasing = false;
    }
    const auto& last = r.rows.back();
    detail += "; last ratio " + (last.ratio ? sci(*last.ratio) : std::string("-"));
    const bool ok = decreasing && last.ratio && *last.ratio >= kRichardsonLow && *last.ratio <= kRichardsonHigh &&
                    last.l2_error < 1e-3;
    report.checks.push_back({"path integral converges at second order (" + c.name + ")", ok, detail});
  }
  {
    const auto k = short_time_matrix(RealPolynomial{{0.3, -1.0, 0.2}}, 1.0, 0.5, Grid::span(-3.0, 3.0, 256));
    bool symmetric = true;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < k.size(); ++j) symmetric = symmetric && k.at(i, j) == k.at(j, i);
    report.checks.push_back({"short-time kernel matrix symmetric", symmetric, "bitwise"});
  }
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed) {
  VerifyReport report;
  RandomAlgebra rnd(seed);
  symbolic_checks(report, rnd);
  heisenberg_checks(report, rnd);
  propagator_checks(report, rnd);
  pathint_checks(report);
  return report;
}

}  // namespace ccr
