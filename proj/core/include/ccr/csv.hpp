#pragma once

#include <complex>
#include <string>

#include "ccr/propagator.hpp"
#include "ccr/wavefunction.hpp"

namespace ccr::csv {

/// 17 significant digits in scientific notation ("%.16e"); round-trips any double.
std::string number(double v);

/// Header "x,re,im", one row per sample.
std::string wavefunction(const WaveFunction& psi);

/// Header "x_b,x_a,re,im", x_b-major over the grid.
std::string kernel_table(const GaussianKernel& kernel, const Grid& grid);

/// Header "name,re,im" with rows a, b, c, d, e, A.
std::string kernel_coefficients(const GaussianKernel& kernel);

}  // namespace ccr::csv
