#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccr/polynomial.hpp"
#include "ccr/propagator.hpp"
#include "ccr/wavefunction.hpp"

namespace ccr {

/// W(x) = \int F dx with W(0) = 0, exact.
Polynomial antiderivative(const Polynomial& force);

/// One time slice: entries
///   (m / 2 pi i dt)^(1/2) exp{(i m / 2 dt)((x_i - x_j)^2 + (dt^2/m)(W(x_i) + W(x_j)))} dx
struct ShortTimeKernel {
  RealPolynomial potential_integral;  // W
  double mass = 1.0;
  double dt = 0.0;
  Grid grid;

  Complex entry(double xi, double xj) const;
  /// Same bound as GaussianKernel::max_phase_step with a = m / (2 dt),
  /// b = -m / dt and d = (dt / 2) max |F| over the grid.
  double max_phase_step() const;
};

/// Dense n x n slice propagator, row-major, quadrature weight dx folded in.
class KernelMatrix {
 public:
  KernelMatrix(const Grid& grid, std::vector<Complex> entries);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return grid_.n; }
  const Complex& at(std::size_t i, std::size_t j) const { return entries_[i * grid_.n + j]; }
  const std::vector<Complex>& entries() const { return entries_; }

  /// K psi with a fixed left-to-right sum per row.
  std::vector<Complex> apply(const std::vector<Complex>& psi) const;

 private:
  Grid grid_;
  std::vector<Complex> entries_;
};

/// Builds the slice matrix for force F. Throws GridTooCoarse if the kinetic
/// phase is not resolved by the grid.
KernelMatrix short_time_matrix(const RealPolynomial& force, double mass, double dt, const Grid& grid);

inline constexpr double kBoundaryLeakLimit = 1e-6;

struct Propagation {
  WaveFunction psi;
  /// Largest edge_mass_fraction seen over all steps.
  double max_edge_fraction = 0.0;
  bool boundary_leak() const { return max_edge_fraction > kBoundaryLeakLimit; }
};

/// psi_N = K^N psi_0.
Propagation propagate(const KernelMatrix& kernel, const WaveFunction& psi0, unsigned steps);

/// Closed-form flow for F = 0, F = F0 and F = -k x (k > 0); nullopt otherwise.
std::optional<AffineFlowExact> classify_force(const RealPolynomial& force, double mass);

/// Exact evolution of psi over t for a solvable flow, including the global
/// phase of exp(-iHt).
WaveFunction exact_reference(const AffineFlowExact& flow, const WaveFunction& psi, double t);

inline constexpr double kRichardsonLow = 3.2;
inline constexpr double kRichardsonHigh = 4.8;

struct ConvergenceRow {
  unsigned steps = 0;
  double dt = 0.0;
  double l2_error = 0.0;
  std::optional<double> ratio;  // error(previous row) / error(this row)
  bool boundary_leak = false;
};

struct ConvergenceReport {
  /// "closed-form:<model>" or "self:N=<finest>".
  std::string reference;
  std::vector<ConvergenceRow> rows;
  /// Smallest N after which every ratio lies in [kRichardsonLow, kRichardsonHigh].
  std::optional<unsigned> asymptotic_from;

  std::string to_csv() const;
};

/// Runs propagate for each N in `steps` (strictly increasing) at fixed
/// t_total. Solvable forces are compared with exact_reference; other forces
/// with the finest-N run, which is then omitted from the rows.
ConvergenceReport convergence_study(const RealPolynomial& force, double mass, const WaveFunction& psi0,
                                    double t_total, const std::vector<unsigned>& steps);

}  // namespace ccr
