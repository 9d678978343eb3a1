#include "ccr/csv.hpp"

#include <cstdio>

namespace ccr::csv {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

namespace {
std::string complex_cells(Complex z) { return number(z.real()) + "," + number(z.imag()); }
}  // namespace

std::string wavefunction(const WaveFunction& psi) {
  std::string out = "x,re,im\n";
  for (std::size_t i = 0; i < psi.samples.size(); ++i)
    out += number(psi.grid.x(i)) + "," + complex_cells(psi.samples[i]) + "\n";
  return out;
}

std::string kernel_table(const GaussianKernel& kernel, const Grid& grid) {
  std::string out = "x_b,x_a,re,im\n";
  for (std::size_t i = 0; i < grid.n; ++i)
    for (std::size_t j = 0; j < grid.n; ++j) {
      const double xb = grid.x(i);
      const double xa = grid.x(j);
      out += number(xb) + "," + number(xa) + "," + complex_cells(kernel(xb, xa)) + "\n";
    }
  return out;
}

std::string kernel_coefficients(const GaussianKernel& kernel) {
  std::string out = "name,re,im\n";
  out += "a," + complex_cells(kernel.a) + "\n";
  out += "b," + complex_cells(kernel.b) + "\n";
  out += "c," + complex_cells(kernel.c) + "\n";
  out += "d," + complex_cells(kernel.d) + "\n";
  out += "e," + complex_cells(kernel.e) + "\n";
  out += "A," + complex_cells(kernel.amplitude) + "\n";
  return out;
}

}  // namespace ccr::csv
