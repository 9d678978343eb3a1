#include "ccr/propagator.hpp"

#include <cmath>
#include <numbers>

#include "ccr/parallel.hpp"

namespace ccr {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}
}  // namespace

std::string_view to_string(FlowModel model) {
  switch (model) {
    case FlowModel::Free:
      return "free";
    case FlowModel::Harmonic:
      return "harmonic";
    case FlowModel::Linear:
      return "linear";
  }
  return "unknown";
}

FlowModel parse_flow_model(std::string_view name) {
  if (name == "free") return FlowModel::Free;
  if (name == "harmonic") return FlowModel::Harmonic;
  if (name == "linear") return FlowModel::Linear;
  throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected free, harmonic or linear)");
}

AffineFlowExact AffineFlowExact::free(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  return {FlowModel::Free, mass, 0.0, 0.0};
}

AffineFlowExact AffineFlowExact::harmonic(double mass, double omega) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  return {FlowModel::Harmonic, mass, omega, 0.0};
}

AffineFlowExact AffineFlowExact::linear(double mass, double force) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  return {FlowModel::Linear, mass, 0.0, force};
}

double AffineFlowExact::alpha(double t) const { return model == FlowModel::Harmonic ? std::cos(omega * t) : 1.0; }

double AffineFlowExact::beta(double t) const {
  return model == FlowModel::Harmonic ? std::sin(omega * t) / (mass * omega) : t / mass;
}

double AffineFlowExact::gamma(double t) const {
  return model == FlowModel::Linear ? force * t * t / (2.0 * mass) : 0.0;
}

CausticSingularity::CausticSingularity(double t, double beta)
    : std::domain_error("caustic at t = " + fmt_double(t) + ": |beta| = " + fmt_double(std::abs(beta)) +
                        " <= " + fmt_double(kCausticEpsilon)) {}

GridTooCoarse::GridTooCoarse(double phase_step, double dx)
    : std::domain_error("grid too coarse: kernel phase moves " + fmt_double(phase_step) +
                        " rad between samples (limit pi/2) at dx = " + fmt_double(dx)),
      phase_step_(phase_step) {}

Complex GaussianKernel::operator()(double xb, double xa) const {
  return amplitude * std::exp(kI * (a * xb * xb + b * xb * xa + c * xa * xa + d * xb + e * xa));
}

double GaussianKernel::max_phase_step(const Grid& grid) const {
  const double x = grid.max_abs();
  return grid.dx * (2.0 * std::max(std::abs(a), std::abs(c)) * x + std::abs(b) * x +
                    std::max(std::abs(d), std::abs(e)));
}

GaussianKernel gaussian_kernel(const AffineFlowExact& flow, double t) {
  const double alpha = flow.alpha(t);
  const double beta = flow.beta(t);
  const double gamma = flow.gamma(t);
  if (!(std::abs(beta) > kCausticEpsilon)) throw CausticSingularity(t, beta);
  GaussianKernel k;
  k.a = k.c = alpha / (2.0 * beta);
  k.b = -1.0 / beta;
  k.d = k.e = gamma / beta;
  k.amplitude = 1.0 / std::sqrt(2.0 * kPi * kI * beta);
  k.alpha = alpha;
  k.beta = beta;
  k.gamma = gamma;
  return k;
}

Complex closed_form_kernel(const AffineFlowExact& flow, double t, double xb, double xa) {
  const double beta = flow.beta(t);
  if (!(std::abs(beta) > kCausticEpsilon)) throw CausticSingularity(t, beta);
  const double m = flow.mass;
  switch (flow.model) {
    case FlowModel::Free: {
      const double dx = xb - xa;
      return std::sqrt(m / (2.0 * kPi * kI * t)) * std::exp(kI * m * dx * dx / (2.0 * t));
    }
    case FlowModel::Harmonic: {
      const double w = flow.omega;
      const double s = std::sin(w * t);
      const double c = std::cos(w * t);
      const double q = (xb * xb + xa * xa) * c - 2.0 * xb * xa;
      return std::sqrt(m * w / (2.0 * kPi * kI * s)) * std::exp(-(m * w * q) / (2.0 * kI * s));
    }
    case FlowModel::Linear: {
      const double dx = xb - xa;
      const double f = flow.force;
      return std::sqrt(m / (2.0 * kPi * kI * t)) *
             std::exp(kI * m / (2.0 * t) * (dx * dx + f * t * t * (xb + xa) / m));
    }
  }
  throw std::logic_error("unreachable flow model");
}

double schrodinger_phase_offset(const AffineFlowExact& flow, double t) {
  if (flow.model != FlowModel::Linear) return 0.0;
  return -flow.force * flow.force * t * t * t / (24.0 * flow.mass);
}

void check_grid(const GaussianKernel& kernel, const Grid& grid) {
  const double step = kernel.max_phase_step(grid);
  if (step > kPi / 2.0 * (1.0 + 1e-12)) throw GridTooCoarse(step, grid.dx);
}

WaveFunction evolve_exact(const GaussianKernel& kernel, const WaveFunction& psi) {
  check_grid(kernel, psi.grid);
  const Grid& g = psi.grid;
  const std::size_t n = g.n;
  // Split U into row, column and cross factors; the cross factor
  // exp(i b x_b x_a) is advanced by a per-row ratio and reseeded every
  // kReseed samples to bound rounding drift.
  constexpr std::size_t kReseed = 32;
  std::vector<Complex> column(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xa = g.x(k);
    column[k] = g.weight(k) * std::exp(kI * (kernel.c * xa * xa + kernel.e * xa)) * psi.samples[k];
  }
  WaveFunction out{g, std::vector<Complex>(n)};
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const double xb = g.x(j);
      const Complex ratio = std::exp(kI * kernel.b * xb * g.dx);
      Complex z{1.0, 0.0};
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        if (k % kReseed == 0)
          z = std::exp(kI * kernel.b * xb * g.x(k));
        else
          z *= ratio;
        acc += z * column[k];
      }
      out.samples[j] = kernel.amplitude * std::exp(kI * (kernel.a * xb * xb + kernel.d * xb)) * acc;
    }
  });
  return out;
}

}  // namespace ccr
