#pragma once

#include <complex>
#include <vector>

#include "critlab/grid.hpp"

namespace critlab::fft {

using cvec = std::vector<std::complex<double>>;

/// Unscaled forward DFT (sign -1 in the exponent), 1D or 2D per grid.dim.
cvec forward(const Grid& grid, const std::vector<double>& samples);
cvec forward_c(const Grid& grid, const cvec& in);

/// Inverse DFT scaled by 1/n^dim; returns complex output.
cvec inverse_c(const Grid& grid, const cvec& coeffs);

/// Inverse DFT scaled by 1/n^dim, real part extracted.
/// Relative imaginary residual above `imag_tol` * max|coeff scale| throws.
std::vector<double> inverse_real(const Grid& grid, const cvec& coeffs,
                                 double imag_tol = 1e-10);

}  // namespace critlab::fft
