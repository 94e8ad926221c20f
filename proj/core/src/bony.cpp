#include "critlab/bony.hpp"

#include <cmath>

namespace critlab::lp {
namespace {

using std::size_t;
using vec = std::vector<double>;

// physical samples of mask * f
vec masked_samples(const Field& f, const vec& mask) {
  fft::cvec spec(f.spectrum());
  for (size_t i = 0; i < spec.size(); ++i) spec[i] *= mask[i];
  return fft::inverse_real(f.grid(), spec);
}

vec derivative_samples(const Grid& grid, const vec& samples) {
  fft::cvec spec = fft::forward(grid, samples);
  spec = spectral::derivative_spec(grid, spec, 0);
  return fft::inverse_real(grid, spec);
}

void axpy_product(vec& acc, const vec& a, const vec& b) {
  for (size_t i = 0; i < acc.size(); ++i) acc[i] += a[i] * b[i];
}

}  // namespace

BonyParts bony_decompose(const Field& u, const Field& v, const DyadicPartition& part) {
  require_same_grid(u.grid(), v.grid(), "bony_decompose");
  require_same_grid(u.grid(), part.grid(), "bony_decompose");
  const Grid& g = u.grid();
  const int jmax = part.j_max();
  const bool symmetric = &u == &v || u.spectrum() == v.spectrum();

  // inhomogeneous ladder: index 0 is psi, index l is phi_l
  std::vector<vec> ub(jmax + 1), vb(jmax + 1), dvb(jmax + 1);
  ub[0] = masked_samples(u, part.psi_hat());
  vb[0] = masked_samples(v, part.psi_hat());
  for (int l = 1; l <= jmax; ++l) {
    ub[l] = masked_samples(u, part.phi_hat(l));
    vb[l] = masked_samples(v, part.phi_hat(l));
  }
  for (int l = 0; l <= jmax; ++l) dvb[l] = derivative_samples(g, vb[l]);

  // prefix sums S_m u and suffix sums (u above block m)
  std::vector<vec> Su(jmax + 1), Hu(jmax + 2);
  Su[0] = ub[0];
  for (int m = 1; m <= jmax; ++m) {
    Su[m] = Su[m - 1];
    for (size_t i = 0; i < Su[m].size(); ++i) Su[m][i] += ub[m][i];
  }
  Hu[jmax + 1].assign(g.size(), 0.0);
  for (int m = jmax; m >= 0; --m) {
    Hu[m] = Hu[m + 1];
    for (size_t i = 0; i < Hu[m].size(); ++i) Hu[m][i] += ub[m][i];
  }

  vec low_high(g.size(), 0.0), high_low(g.size(), 0.0), resonant(g.size(), 0.0);
  for (int l = 0; l <= jmax; ++l) {
    if (l - 3 >= 0) axpy_product(low_high, Su[l - 3], dvb[l]);
    if (l + 3 <= jmax) axpy_product(high_low, Hu[l + 3], dvb[l]);
  }

  if (symmetric) {
    // (1/2) d_x of the near-diagonal square
    vec w(g.size(), 0.0);
    for (int l = 0; l <= jmax; ++l)
      for (int k = std::max(0, l - 2); k <= std::min(jmax, l + 2); ++k)
        axpy_product(w, ub[k], ub[l]);
    w = derivative_samples(g, w);
    for (size_t i = 0; i < w.size(); ++i) resonant[i] = 0.5 * w[i];
  } else {
    for (int l = 0; l <= jmax; ++l)
      for (int k = std::max(0, l - 2); k <= std::min(jmax, l + 2); ++k)
        axpy_product(resonant, ub[k], dvb[l]);
  }

  BonyParts parts;
  parts.low_high = Field::from_samples(g, std::move(low_high));
  parts.high_low = Field::from_samples(g, std::move(high_low));
  parts.resonant = Field::from_samples(g, std::move(resonant));
  return parts;
}

}  // namespace critlab::lp
