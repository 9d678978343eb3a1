#include "ccr/wavefunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace ccr {

Grid Grid::span(double x_min, double x_max, std::size_t n) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(x_max > x_min)) throw std::invalid_argument("grid needs x_max > x_min");
  return Grid{x_min, (x_max - x_min) / static_cast<double>(n - 1), n};
}

double Grid::max_abs() const { return std::max(std::abs(x_min), std::abs(x_max())); }

namespace {

void require_same_grid(const WaveFunction& a, const WaveFunction& b) {
  if (a.grid.n != b.grid.n || a.grid.x_min != b.grid.x_min || a.grid.dx != b.grid.dx ||
      a.samples.size() != b.samples.size())
    throw std::invalid_argument("wave functions live on different grids");
}

double weighted_sum(const WaveFunction& psi, auto&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < psi.samples.size(); ++i) acc += psi.grid.weight(i) * f(i);
  return acc;
}

}  // namespace

WaveFunction gaussian_packet(const Grid& grid, double x0, double p0, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("packet width must be positive");
  WaveFunction psi{grid, std::vector<Complex>(grid.n)};
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const double u = (x - x0) / sigma;
    psi.samples[i] = std::exp(-0.5 * u * u) * std::polar(1.0, p0 * x);
  }
  const double s = norm(psi);
  for (auto& v : psi.samples) v /= s;
  return psi;
}

double norm(const WaveFunction& psi) {
  return std::sqrt(weighted_sum(psi, [&](std::size_t i) { return std::norm(psi.samples[i]); }));
}

double l2_distance(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  return std::sqrt(weighted_sum(a, [&](std::size_t i) { return std::norm(a.samples[i] - b.samples[i]); }));
}

Complex inner(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.samples.size(); ++i) acc += a.grid.weight(i) * std::conj(a.samples[i]) * b.samples[i];
  return acc;
}

double mean_position(const WaveFunction& psi) {
  const double mass = weighted_sum(psi, [&](std::size_t i) { return std::norm(psi.samples[i]); });
  return weighted_sum(psi, [&](std::size_t i) { return psi.grid.x(i) * std::norm(psi.samples[i]); }) / mass;
}

double mean_momentum(const WaveFunction& psi) {
  static constexpr std::array<double, 4> c{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  const auto& s = psi.samples;
  const std::size_t n = s.size();
  const double dx = psi.grid.dx;
  auto derivative = [&](std::size_t i) -> Complex {
    if (i >= 4 && i + 4 < n) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 1; k <= 4; ++k) acc += c[k - 1] * (s[i + k] - s[i - k]);
      return acc / dx;
    }
    if (i == 0) return (s[1] - s[0]) / dx;
    if (i + 1 == n) return (s[n - 1] - s[n - 2]) / dx;
    return (s[i + 1] - s[i - 1]) / (2.0 * dx);
  };
  const double mass = weighted_sum(psi, [&](std::size_t i) { return std::norm(s[i]); });
  // <psi| -i d/dx |psi> is real; take the real part of conj(psi) (-i psi').
  const double p = weighted_sum(psi, [&](std::size_t i) {
    return (std::conj(s[i]) * Complex(0.0, -1.0) * derivative(i)).real();
  });
  return p / mass;
}

double packet_width(const WaveFunction& psi) {
  const double mean = mean_position(psi);
  const double mass = weighted_sum(psi, [&](std::size_t i) { return std::norm(psi.samples[i]); });
  const double var = weighted_sum(psi, [&](std::size_t i) {
                       const double u = psi.grid.x(i) - mean;
                       return u * u * std::norm(psi.samples[i]);
                     }) /
                     mass;
  return std::sqrt(2.0 * var);
}

double edge_mass_fraction(const WaveFunction& psi, std::size_t edge) {
  const std::size_t n = psi.samples.size();
  const double total = weighted_sum(psi, [&](std::size_t i) { return std::norm(psi.samples[i]); });
  if (total == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (i < edge || i + edge >= n) acc += psi.grid.weight(i) * std::norm(psi.samples[i]);
  return acc / total;
}

}  // namespace ccr
