#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ccr/wavefunction.hpp"

namespace ccr {

enum class FlowModel { Free, Harmonic, Linear };

std::string_view to_string(FlowModel model);
/// "free" | "harmonic" | "linear"
FlowModel parse_flow_model(std::string_view name);

/// Closed-form coefficients of X(t) = alpha X0 + beta P0 + gamma for the
/// three solvable force laws.
struct AffineFlowExact {
  FlowModel model = FlowModel::Free;
  double mass = 1.0;
  double omega = 0.0;
  double force = 0.0;

  static AffineFlowExact free(double mass);
  static AffineFlowExact harmonic(double mass, double omega);
  static AffineFlowExact linear(double mass, double force);

  double alpha(double t) const;
  double beta(double t) const;
  double gamma(double t) const;
};

inline constexpr double kCausticEpsilon = 1e-12;

class CausticSingularity : public std::domain_error {
 public:
  CausticSingularity(double t, double beta);
};

class GridTooCoarse : public std::domain_error {
 public:
  GridTooCoarse(double phase_step, double dx);
  double phase_step() const { return phase_step_; }

 private:
  double phase_step_;
};

/// U(x_b, x_a) = A exp{i (a x_b^2 + b x_b x_a + c x_a^2 + d x_b + e x_a)}.
struct GaussianKernel {
  Complex a, b, c, d, e;
  Complex amplitude;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  Complex operator()(double xb, double xa) const;

  /// Upper bound on the kernel phase change between adjacent samples of
  /// `grid`: dx (2 max(|a|,|c|) X + |b| X + max(|d|,|e|)), X = max |x|.
  double max_phase_step(const Grid& grid) const;
};

/// Solves the pair of first-order relations
///   i dU/dx_a = ((x_b - alpha x_a - gamma) / beta) U
///   i dU/dx_b = ((x_a - alpha x_b - gamma) / beta) U
/// and fixes A = (2 pi i beta)^(-1/2) on the principal branch from the t -> 0
/// delta limit. Throws CausticSingularity when |beta| <= kCausticEpsilon.
GaussianKernel gaussian_kernel(const AffineFlowExact& flow, double t);

/// Direct evaluation of the textbook closed forms (free, Mehler, constant
/// force) for cross-checking gaussian_kernel.
Complex closed_form_kernel(const AffineFlowExact& flow, double t, double xb, double xa);

/// Phase phi such that exp(-iHt) = e^{i phi} x (kernel above). Nonzero only for
/// the constant force, where the closed form omits -F0^2 t^3 / (24 m).
double schrodinger_phase_offset(const AffineFlowExact& flow, double t);

/// Throws GridTooCoarse if the kernel phase can move by more than pi/2
/// between neighbouring samples.
void check_grid(const GaussianKernel& kernel, const Grid& grid);

/// psi_out(x_b) = sum_a w_a U(x_b, x_a) psi(x_a) on the input grid, trapezoid
/// weights, fixed summation order per output sample.
WaveFunction evolve_exact(const GaussianKernel& kernel, const WaveFunction& psi);

}  // namespace ccr
