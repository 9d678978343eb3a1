#include "ccr/pathint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccr/csv.hpp"
#include "ccr/parallel.hpp"

namespace ccr {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
}  // namespace

Polynomial antiderivative(const Polynomial& force) { return force.antiderivative(); }

Complex ShortTimeKernel::entry(double xi, double xj) const {
  const double u = xi - xj;
  const double w = potential_integral(xi) + potential_integral(xj);
  const Complex amplitude = std::sqrt(mass / (2.0 * kPi * kI * dt));
  return amplitude * std::exp(kI * (mass / (2.0 * dt)) * (u * u + (dt * dt / mass) * w)) * grid.dx;
}

double ShortTimeKernel::max_phase_step() const {
  const RealPolynomial force = potential_integral.derivative();
  double max_force = 0.0;
  for (std::size_t i = 0; i < grid.n; ++i) max_force = std::max(max_force, std::abs(force(grid.x(i))));
  const double a = mass / (2.0 * dt);
  const double b = mass / dt;
  const double x = grid.max_abs();
  return grid.dx * (2.0 * a * x + b * x + 0.5 * dt * max_force);
}

KernelMatrix::KernelMatrix(const Grid& grid, std::vector<Complex> entries) : grid_(grid), entries_(std::move(entries)) {
  if (entries_.size() != grid_.n * grid_.n) throw std::invalid_argument("kernel matrix size does not match grid");
}

std::vector<Complex> KernelMatrix::apply(const std::vector<Complex>& psi) const {
  const std::size_t n = grid_.n;
  if (psi.size() != n) throw std::invalid_argument("state size does not match kernel");
  std::vector<Complex> out(n);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Complex* row = &entries_[i * n];
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * psi[j];
      out[i] = acc;
    }
  });
  return out;
}

KernelMatrix short_time_matrix(const RealPolynomial& force, double mass, double dt, const Grid& grid) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  ShortTimeKernel k{force.antiderivative(), mass, dt, grid};
  const double step = k.max_phase_step();
  if (step > kPi / 2.0 * (1.0 + 1e-12)) throw GridTooCoarse(step, grid.dx);

  const std::size_t n = grid.n;
  std::vector<Complex> entries(n * n);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i; j < n; ++j) entries[i * n + j] = k.entry(grid.x(i), grid.x(j));
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) entries[i * n + j] = entries[j * n + i];
  return KernelMatrix(grid, std::move(entries));
}

Propagation propagate(const KernelMatrix& kernel, const WaveFunction& psi0, unsigned steps) {
  const Grid& g = kernel.grid();
  if (psi0.grid.n != g.n || psi0.grid.dx != g.dx || psi0.grid.x_min != g.x_min)
    throw std::invalid_argument("initial state is not on the kernel grid");
  Propagation out{psi0, edge_mass_fraction(psi0)};
  for (unsigned s = 0; s < steps; ++s) {
    out.psi.samples = kernel.apply(out.psi.samples);
    out.max_edge_fraction = std::max(out.max_edge_fraction, edge_mass_fraction(out.psi));
  }
  return out;
}

std::optional<AffineFlowExact> classify_force(const RealPolynomial& force, double mass) {
  const int degree = force.degree();
  if (degree < 0) return AffineFlowExact::free(mass);
  if (degree == 0) return AffineFlowExact::linear(mass, force.coeffs[0]);
  if (degree == 1 && force.coeffs[0] == 0.0 && force.coeffs[1] < 0.0)
    return AffineFlowExact::harmonic(mass, std::sqrt(-force.coeffs[1] / mass));
  return std::nullopt;
}

WaveFunction exact_reference(const AffineFlowExact& flow, const WaveFunction& psi, double t) {
  WaveFunction out = evolve_exact(gaussian_kernel(flow, t), psi);
  const Complex phase = std::polar(1.0, schrodinger_phase_offset(flow, t));
  for (auto& v : out.samples) v *= phase;
  return out;
}

std::string ConvergenceReport::to_csv() const {
  std::string out = "N,dt,l2_error,ratio,boundary_leak\n";
  for (const auto& r : rows) {
    out += std::to_string(r.steps) + "," + csv::number(r.dt) + "," + csv::number(r.l2_error) + "," +
           (r.ratio ? csv::number(*r.ratio) : std::string()) + "," + (r.boundary_leak ? "1" : "0") + "\n";
  }
  return out;
}

ConvergenceReport convergence_study(const RealPolynomial& force, double mass, const WaveFunction& psi0,
                                    double t_total, const std::vector<unsigned>& steps) {
  if (steps.empty()) throw std::invalid_argument("convergence study needs at least one N");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == 0) throw std::invalid_argument("N must be positive");
    if (i > 0 && steps[i] <= steps[i - 1]) throw std::invalid_argument("N values must be strictly increasing");
  }
  if (!(t_total > 0.0)) throw std::invalid_argument("t_total must be positive");

  auto run = [&](unsigned n) {
    const double dt = t_total / n;
    return propagate(short_time_matrix(force, mass, dt, psi0.grid), psi0, n);
  };

  ConvergenceReport report;
  std::vector<unsigned> measured = steps;
  WaveFunction reference;
  std::optional<Propagation> finest;
  if (auto flow = classify_force(force, mass)) {
    report.reference = "closed-form:" + std::string(to_string(flow->model));
    reference = exact_reference(*flow, psi0, t_total);
  } else {
    if (steps.size() < 2) throw std::invalid_argument("self-convergence needs at least two N values");
    measured.pop_back();
    report.reference = "self:N=" + std::to_string(steps.back());
    finest = run(steps.back());
    reference = finest->psi;
  }

  for (unsigned n : measured) {
    Propagation p = run(n);
    ConvergenceRow row{n, t_total / n, l2_distance(p.psi, reference), std::nullopt, p.boundary_leak()};
    if (!report.rows.empty()) row.ratio = report.rows.back().l2_error / row.l2_error;
    report.rows.push_back(row);
  }

  for (std::size_t i = report.rows.size(); i-- > 1;) {
    const double r = *report.rows[i].ratio;
    if (r < kRichardsonLow || r > kRichardsonHigh) break;
    report.asymptotic_from = report.rows[i - 1].steps;
  }
  return report;
}

}  // namespace ccr
