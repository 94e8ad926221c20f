#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "critlab/field.hpp"

namespace critlab::spectral {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Per-bin values of a Fourier multiplier on the grid's frequency ladder.
using mvec = std::vector<std::complex<double>>;

/// Tabulates m(xi_x, xi_y) over the grid (xi_y = 0 in 1D).
template <class F>
mvec make_multiplier(const Grid& grid, F&& m) {
  mvec out(grid.size());
  if (grid.dim == 1) {
    for (int k = 0; k < grid.n; ++k) out[k] = m(grid.freq(k), 0.0);
  } else {
    for (int kx = 0; kx < grid.n; ++kx)
      for (int ky = 0; ky < grid.n; ++ky)
        out[std::size_t(kx) * grid.n + ky] = m(grid.freq(kx), grid.freq(ky));
  }
  return out;
}

/// Tabulates a radial multiplier m(|xi|).
template <class F>
mvec make_radial_multiplier(const Grid& grid, F&& m) {
  mvec out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m(grid.freq_radial(i));
  return out;
}

enum class Realness { enforce, allow_complex };

/// Throws unless the tabulated multiplier is conjugate-symmetric on the
/// ladder (self-paired Nyquist bins must be real unless the input there
/// vanishes).
void check_conjugate_symmetric(const Grid& grid, const mvec& m, const fft::cvec* input);

/// Output spectrum = m(xi) * input spectrum.
fft::cvec apply_multiplier_spec(const Grid& grid, const fft::cvec& in, const mvec& m);

Field apply_multiplier(const Field& f, const mvec& m, Realness realness = Realness::enforce);

/// 2/3-rule cutoff: modes with |k| > n/3 (per axis) are dropped.
inline int dealias_cutoff(int n) { return n / 3; }
void dealias_spec(const Grid& grid, fft::cvec& coeffs);
Field dealias(const Field& f);

/// Uniform-grid quadrature norm: (sum |f|^p dx^dim)^(1/p); p = kInf gives max|f|.
double lp_norm(const Field& f, double p);
double lp_norm_samples(const Grid& grid, const std::vector<double>& samples, double p);

/// Spatial derivative along axis (0 = x, 1 = y); Nyquist mode zeroed.
Field derivative(const Field& f, int axis = 0);
fft::cvec derivative_spec(const Grid& grid, const fft::cvec& in, int axis = 0);

/// l2 norm of the spectrum scaled so it matches lp_norm(f, 2) (Parseval).
double parseval_l2(const Grid& grid, const fft::cvec& coeffs);

/// Mean-value integral: dx^dim * coeff(0).
double integral(const Field& f);

}  // namespace critlab::spectral
