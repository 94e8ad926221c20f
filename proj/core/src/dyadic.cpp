#include "critlab/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace critlab::lp {
namespace {

// smooth step built from the exp(-1/x) glue: 0 for s<=0, 1 for s>=1
double smooth_step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

}  // namespace

double DyadicPartition::phi0_profile(double xi) {
  const double a = std::abs(xi);
  if (a <= 0.75 || a >= 2.0) return 0.0;
  if (a < 1.0) return smooth_step(4.0 * (a - 0.75));
  if (a <= 1.5) return 1.0;
  return 1.0 - smooth_step(4.0 * (a / 2.0 - 0.75));
}

double DyadicPartition::psi_profile(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.5) return 1.0;
  if (a >= 2.0) return 0.0;
  return 1.0 - smooth_step(4.0 * (a / 2.0 - 0.75));
}

DyadicPartition::DyadicPartition(const Grid& grid, int j_min, int j_max)
    : grid_(grid), j_min_(j_min), j_max_(j_max) {
  if (j_min > j_max) throw std::invalid_argument("partition: j_min > j_max");
  if (std::ldexp(1.0, j_max + 1) > grid.freq_max() * (1.0 + 1e-12))
    throw std::invalid_argument("partition: 2^(j_max+1) exceeds resolved band");
  if (std::ldexp(1.0, j_min - 1) < grid.freq_min() * (1.0 - 1e-12))
    throw std::invalid_argument("partition: 2^(j_min-1) below resolved band");

  phi_.resize(std::size_t(j_max - j_min + 1));
  for (int j = j_min; j <= j_max; ++j) {
    auto& tab = phi_[std::size_t(j - j_min)];
    tab.resize(grid.size());
    const double scale = std::ldexp(1.0, -j);
    for (std::size_t i = 0; i < tab.size(); ++i)
      tab[i] = phi0_profile(scale * grid.freq_radial(i));
  }
  psi_.resize(grid.size());
  for (std::size_t i = 0; i < psi_.size(); ++i) psi_[i] = psi_profile(grid.freq_radial(i));
}

const std::vector<double>& DyadicPartition::phi_hat(int j) const {
  if (!in_band(j)) throw std::out_of_range("partition: block index outside band");
  return phi_[std::size_t(j - j_min_)];
}

std::vector<double> DyadicPartition::partial_sum_hat(int j) const {
  std::vector<double> out(grid_.size(), 0.0);
  if (j < 0) return out;
  out = psi_;
  for (int k = std::max(1, j_min_); k <= std::min(j, j_max_); ++k) {
    const auto& tab = phi_hat(k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += tab[i];
  }
  return out;
}

DyadicPartition build_partition(const Grid& grid, int j_min, int j_max) {
  return DyadicPartition(grid, j_min, j_max);
}

void default_band(const Grid& grid, int& j_min, int& j_max) {
  // widest band satisfying the resolution preconditions
  j_min = int(std::ceil(std::log2(grid.freq_min()))) + 1;
  while (std::ldexp(1.0, j_min - 1) < grid.freq_min() * (1.0 - 1e-12)) ++j_min;
  j_max = int(std::floor(std::log2(grid.freq_max()))) - 1;
  while (std::ldexp(1.0, j_max + 1) > grid.freq_max() * (1.0 + 1e-12)) --j_max;
}

namespace {

fft::cvec masked_spectrum(const Field& f, const std::vector<double>& mask) {
  const fft::cvec& in = f.spectrum();
  fft::cvec out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = mask[i] * in[i];
  return out;
}

}  // namespace

Field block_project(const Field& f, const DyadicPartition& part, int j) {
  require_same_grid(f.grid(), part.grid(), "block_project");
  return Field::from_spectrum(f.grid(), masked_spectrum(f, part.phi_hat(j)));
}

Field low_project(const Field& f, const DyadicPartition& part) {
  require_same_grid(f.grid(), part.grid(), "low_project");
  return Field::from_spectrum(f.grid(), masked_spectrum(f, part.psi_hat()));
}

Field partial_sum(const Field& f, const DyadicPartition& part, int j) {
  require_same_grid(f.grid(), part.grid(), "partial_sum");
  return Field::from_spectrum(f.grid(), masked_spectrum(f, part.partial_sum_hat(j)));
}

double block_lp(const Field& f, const DyadicPartition& part, int j, double p) {
  return spectral::lp_norm(block_project(f, part, j), p);
}

double low_lp(const Field& f, const DyadicPartition& part, double p) {
  return spectral::lp_norm(low_project(f, part), p);
}

double bernstein_ratio(const Field& f, int j, const DyadicPartition& part) {
  Field b = block_project(f, part, j);
  const double bmax = b.max_abs();
  if (bmax <= 1e-14 * std::max(f.max_abs(), 1e-300))
    throw std::domain_error("bernstein_ratio: zero block");
  double dmax = 0.0;
  if (f.grid().dim == 1) {
    dmax = spectral::derivative(b, 0).max_abs();
  } else {
    Field gx = spectral::derivative(b, 0);
    Field gy = spectral::derivative(b, 1);
    const auto& sx = gx.samples();
    const auto& sy = gy.samples();
    for (std::size_t i = 0; i < sx.size(); ++i)
      dmax = std::max(dmax, std::hypot(sx[i], sy[i]));
  }
  return dmax / (std::ldexp(1.0, j) * bmax);
}

}  // namespace critlab::lp
