#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ccr {

using Complex = std::complex<double>;

/// Uniform 1-D grid x_i = x_min + i dx, i in [0, n).
struct Grid {
  double x_min = 0.0;
  double dx = 1.0;
  std::size_t n = 2;

  /// n points spanning [x_min, x_max] inclusive. Requires n >= 2, x_max > x_min.
  static Grid span(double x_min, double x_max, std::size_t n);

  double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx; }
  double x_max() const { return x(n - 1); }
  double max_abs() const;
  /// Trapezoid weight of sample i, including dx.
  double weight(std::size_t i) const { return (i == 0 || i + 1 == n) ? 0.5 * dx : dx; }
};

struct WaveFunction {
  Grid grid;
  std::vector<Complex> samples;
};

/// exp(-(x - x0)^2 / (2 sigma^2) + i p0 x), normalized to unit trapezoid norm.
WaveFunction gaussian_packet(const Grid& grid, double x0, double p0, double sigma);

/// Trapezoid L2 norm.
double norm(const WaveFunction& psi);
double l2_distance(const WaveFunction& a, const WaveFunction& b);
/// Trapezoid inner product <a|b>.
Complex inner(const WaveFunction& a, const WaveFunction& b);

double mean_position(const WaveFunction& psi);
/// <-i d/dx> using an eighth-order central difference.
double mean_momentum(const WaveFunction& psi);
/// sqrt(2 <(x - <x>)^2>): the sigma of |psi|^2 ~ exp(-(x - x0)^2 / sigma^2).
double packet_width(const WaveFunction& psi);

/// Fraction of |psi|^2 in the `edge` outermost samples on each side.
double edge_mass_fraction(const WaveFunction& psi, std::size_t edge = 5);

inline constexpr double kBoundaryMassLimit = 1e-10;

}  // namespace ccr
