#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ccr/pathint.hpp"
#include "ccr/propagator.hpp"

namespace ccr {
namespace {

using std::numbers::pi;
const Complex kI{0.0, 1.0};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// exp(-iHt) applied to the normalized packet exp(-(x-x0)^2/(2s^2) + i p0 x) for H = P^2/2m.
Complex free_packet(double x, double t, double m, double x0, double p0, double s) {
  const Complex z = 1.0 + kI * t / (m * s * s);
  const double xc = x - x0 - p0 * t / m;
  return std::pow(pi * s * s, -0.25) / std::sqrt(z) *
         std::exp(-xc * xc / (2 * s * s * z) + kI * p0 * x - kI * p0 * p0 * t / (2 * m));
}

TEST(AffineFlowExact, InitialConditions) {
  for (auto f : {AffineFlowExact::free(2.0), AffineFlowExact::harmonic(2.0, 1.3), AffineFlowExact::linear(2.0, 0.7)}) {
    EXPECT_EQ(f.alpha(0), 1.0);
    EXPECT_EQ(f.beta(0), 0.0);
    EXPECT_EQ(f.gamma(0), 0.0);
    const double h = 1e-6;
    EXPECT_NEAR((f.beta(h) - f.beta(-h)) / (2 * h), 0.5, 1e-9);
  }
  EXPECT_THROW(AffineFlowExact::free(0.0), std::invalid_argument);
  EXPECT_THROW(AffineFlowExact::harmonic(1.0, -1.0), std::invalid_argument);
}

TEST(ParseFlowModel, Names) {
  EXPECT_EQ(parse_flow_model("harmonic"), FlowModel::Harmonic);
  EXPECT_EQ(to_string(FlowModel::Linear), "linear");
  EXPECT_THROW(parse_flow_model("cubic"), std::invalid_argument);
}

TEST(GaussianKernel, FreeUnitMassUnitTime) {
  auto k = gaussian_kernel(AffineFlowExact::free(1.0), 1.0);
  EXPECT_NEAR(std::abs(k.a - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(k.c - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(k.b + 1.0), 0, 1e-15);
  EXPECT_EQ(std::abs(k.d), 0.0);
  EXPECT_EQ(std::abs(k.e), 0.0);
  const Complex want = std::exp(Complex(0, -pi / 4)) / std::sqrt(2 * pi);
  EXPECT_LT(std::abs(k.amplitude - want), 1e-15);
}

TEST(GaussianKernel, HarmonicQuarterPeriod) {
  const double m = 2.0, w = 1.5;
  auto k = gaussian_kernel(AffineFlowExact::harmonic(m, w), pi / (2 * w));
  EXPECT_LT(std::abs(k.a), 1e-15);
  EXPECT_LT(std::abs(k.c), 1e-15);
  EXPECT_NEAR(k.b.real(), -m * w, 1e-13);
  EXPECT_EQ(std::abs(k.d), 0.0);
  EXPECT_NEAR(std::abs(k.amplitude), 1 / std::sqrt(2 * pi / (m * w)), 1e-14);
}

TEST(GaussianKernel, AmplitudeModulus) {
  for (double t : {0.1, 0.7, 2.5}) {
    auto f = AffineFlowExact::harmonic(1.3, 0.9);
    auto k = gaussian_kernel(f, t);
    EXPECT_NEAR(std::abs(k.amplitude), std::pow(2 * pi * std::abs(f.beta(t)), -0.5), 1e-13);
  }
}

TEST(GaussianKernel, Caustic) {
  EXPECT_THROW(gaussian_kernel(AffineFlowExact::harmonic(1.0, 2.0), pi / 2.0), CausticSingularity);
  EXPECT_THROW(gaussian_kernel(AffineFlowExact::free(1.0), 0.0), CausticSingularity);
  EXPECT_THROW(gaussian_kernel(AffineFlowExact::harmonic(1.0, 1.0), pi), std::domain_error);
}

TEST(ClosedFormKernel, FreeDiagonalValue) {
  Complex v = closed_form_kernel(AffineFlowExact::free(1.0), 1.0, 0.3, 0.3);
  EXPECT_NEAR(v.real(), 0.2820947917738781, 1e-15);
  EXPECT_NEAR(v.imag(), -0.2820947917738781, 1e-15);
}

TEST(ClosedFormKernel, AgreesWithGaussianKernel) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0), ut(0.05, 2.5);
  const AffineFlowExact flows[] = {AffineFlowExact::free(1.7), AffineFlowExact::harmonic(0.8, 1.1),
                                   AffineFlowExact::linear(1.2, -0.6)};
  for (const auto& f : flows)
    for (int k = 0; k < 200; ++k) {
      const double t = ut(rng), xb = u(rng), xa = u(rng);
      EXPECT_LT(rel(gaussian_kernel(f, t)(xb, xa), closed_form_kernel(f, t, xb, xa)), 1e-12);
    }
}

TEST(ClosedFormKernel, SmallOmegaApproachesFree) {
  const double m = 1.3, t = 0.8, w = 1e-4 / t;
  for (double xb : {-1.0, 0.2, 1.5})
    for (double xa : {-0.7, 0.9}) {
      EXPECT_LT(rel(closed_form_kernel(AffineFlowExact::harmonic(m, w), t, xb, xa),
                    closed_form_kernel(AffineFlowExact::free(m), t, xb, xa)),
                1e-6);
    }
}

// i dU/dx_a = ((x_b - alpha x_a - gamma)/beta) U, checked with central differences.
double residual(const GaussianKernel& k, double xb, double xa, double h) {
  const Complex du = (k(xb, xa + h) - k(xb, xa - h)) / (2 * h);
  return std::abs(kI * du - (xb - k.alpha * xa - k.gamma) / k.beta * k(xb, xa)) / std::abs(k(xb, xa));
}

TEST(GaussianKernel, DefiningRelationSecondOrder) {
  const AffineFlowExact flows[] = {AffineFlowExact::free(1.0), AffineFlowExact::harmonic(1.0, 1.3),
                                   AffineFlowExact::linear(0.9, 1.4)};
  for (const auto& f : flows) {
    auto k = gaussian_kernel(f, 0.9);
    const double r1 = residual(k, 0.4, -0.8, 2e-3), r2 = residual(k, 0.4, -0.8, 1e-3);
    EXPECT_GT(r1 / r2, 3.5);
    EXPECT_LT(r1 / r2, 4.5);
  }
}

TEST(GaussianKernel, GridRule) {
  auto k = gaussian_kernel(AffineFlowExact::free(1.0), 1e-3);
  EXPECT_THROW(check_grid(k, Grid::span(-10, 10, 512)), GridTooCoarse);
  EXPECT_THROW(evolve_exact(k, gaussian_packet(Grid::span(-10, 10, 512), 0, 0, 1)), GridTooCoarse);
  auto k1 = gaussian_kernel(AffineFlowExact::free(1.0), 1.0);
  EXPECT_NO_THROW(check_grid(k1, Grid::span(-10, 10, 512)));
  EXPECT_LE(k1.max_phase_step(Grid::span(-10, 10, 512)), pi / 2);
}

TEST(EvolveExact, FreePacketMatchesAnalyticState) {
  const Grid g = Grid::span(-12, 12, 1024);
  const double s = 1.0, x0 = 0.5, p0 = 0.8;
  auto out = evolve_exact(gaussian_kernel(AffineFlowExact::free(1.0), 1.0), gaussian_packet(g, x0, p0, s));
  double worst = 0;
  for (std::size_t i = 0; i < g.n; ++i) worst = std::max(worst, std::abs(out.samples[i] - free_packet(g.x(i), 1.0, 1.0, x0, p0, s)));
  EXPECT_LT(worst, 1e-6);
}

TEST(EvolveExact, FreeSpreading) {
  const Grid g = Grid::span(-12, 12, 1024);
  const double s = 1.0, m = 1.0, t = 1.0;
  auto out = evolve_exact(gaussian_kernel(AffineFlowExact::free(m), t), gaussian_packet(g, 0, 0, s));
  EXPECT_NEAR(packet_width(out), s * std::sqrt(1 + t * t / (m * m * s * s * s * s)), 1e-6);
}

TEST(EvolveExact, HarmonicQuarterPeriodEhrenfest) {
  const Grid g = Grid::span(-10, 10, 1024);
  const double m = 1.0, w = 1.0, x0 = 1.0, p0 = 0.5;
  auto out = evolve_exact(gaussian_kernel(AffineFlowExact::harmonic(m, w), pi / (2 * w)), gaussian_packet(g, x0, p0, 1.0));
  EXPECT_NEAR(mean_position(out), p0 / (m * w), 1e-6);
  EXPECT_NEAR(mean_momentum(out), -m * w * x0, 1e-6);
}

TEST(EvolveExact, EhrenfestAllModels) {
  const Grid g = Grid::span(-10, 10, 1024);
  const double x0 = -0.4, p0 = 0.6, t = 0.9;
  const AffineFlowExact flows[] = {AffineFlowExact::free(1.2), AffineFlowExact::harmonic(1.0, 1.1),
                                   AffineFlowExact::linear(1.0, 0.8)};
  const auto psi = gaussian_packet(g, x0, p0, 1.0);
  const double xm = mean_position(psi), pm = mean_momentum(psi);
  for (const auto& f : flows) {
    auto out = evolve_exact(gaussian_kernel(f, t), psi);
    EXPECT_NEAR(mean_position(out), f.alpha(t) * xm + f.beta(t) * pm + f.gamma(t), 1e-6) << to_string(f.model);
  }
}

TEST(EvolveExact, NormPreserved) {
  const Grid g = Grid::span(-10, 10, 1024);
  const auto psi = gaussian_packet(g, 0.3, -0.5, 0.9);
  for (const auto& f : {AffineFlowExact::free(1.0), AffineFlowExact::harmonic(1.0, 1.0), AffineFlowExact::linear(1.0, 1.0)})
    EXPECT_NEAR(norm(evolve_exact(gaussian_kernel(f, 1.2), psi)), norm(psi), 1e-6);
}

TEST(EvolveExact, CompositionGroupLaw) {
  const Grid g = Grid::span(-12, 12, 1024);
  const auto psi = gaussian_packet(g, -0.5, 0.4, 1.0);
  for (const auto& f : {AffineFlowExact::free(1.0), AffineFlowExact::linear(1.0, 0.7)}) {
    auto two = exact_reference(f, exact_reference(f, psi, 0.4), 0.6);
    auto one = exact_reference(f, psi, 1.0);
    EXPECT_LT(l2_distance(two, one), 1e-5) << to_string(f.model);
  }
}

// |psi(t) - psi| ~ t |H psi| = 7.7e-4 for sigma = 0.75; the grid rule then needs ~29.5k samples.
TEST(EvolveExact, ShortTimeIsNearIdentity) {
  const Grid g = Grid::span(-3.4, 3.4, 29500);
  auto k = gaussian_kernel(AffineFlowExact::free(1.0), 1e-3);
  ASSERT_LE(k.max_phase_step(g), pi / 2);
  const auto psi = gaussian_packet(g, 0, 0, 0.75);
  ASSERT_LT(edge_mass_fraction(psi), kBoundaryMassLimit);
  EXPECT_LT(l2_distance(evolve_exact(k, psi), psi), 1e-3);
}

TEST(WaveFunction, PacketBasics) {
  const Grid g = Grid::span(-10, 10, 801);
  auto psi = gaussian_packet(g, 1.5, -0.7, 0.8);
  EXPECT_NEAR(norm(psi), 1.0, 1e-14);
  EXPECT_NEAR(mean_position(psi), 1.5, 1e-12);
  EXPECT_NEAR(mean_momentum(psi), -0.7, 1e-8);
  EXPECT_NEAR(packet_width(psi), 0.8, 1e-12);
  EXPECT_LT(edge_mass_fraction(psi), kBoundaryMassLimit);
  EXPECT_GT(edge_mass_fraction(gaussian_packet(g, 9.5, 0, 1.0)), kBoundaryMassLimit);
}

}  // namespace
}  // namespace ccr
