#pragma once

#include <utility>

#include "critlab/fft.hpp"
#include "critlab/grid.hpp"

namespace critlab {

/// Real scalar field on a periodic grid, stored in both physical and
/// spectral form. Immutable after construction; all operations return
/// new values, so concurrent reads are safe.
///
/// Convention: spectrum() holds the unscaled forward DFT; the inverse
/// transform carries the 1/n^dim factor.
class Field {
 public:
  Field() = default;

  static Field from_samples(const Grid& grid, std::vector<double> samples) {
    Field f;
    f.grid_ = grid;
    f.spectrum_ = fft::forward(grid, samples);
    f.samples_ = std::move(samples);
    return f;
  }

  static Field from_spectrum(const Grid& grid, fft::cvec spectrum) {
    Field f;
    f.grid_ = grid;
    f.samples_ = fft::inverse_real(grid, spectrum);
    f.spectrum_ = std::move(spectrum);
    return f;
  }

  /// Builds from a callable x -> value (1D) or (x, y) -> value (2D).
  template <class F>
  static Field sample(const Grid& grid, F&& fn) {
    std::vector<double> s(grid.size());
    if (grid.dim == 1) {
      for (int i = 0; i < grid.n; ++i) s[i] = fn(grid.x(i));
    } else {
      for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j) s[std::size_t(i) * grid.n + j] = fn(grid.x(i), grid.x(j));
    }
    return from_samples(grid, std::move(s));
  }

  static Field zero(const Grid& grid) {
    Field f;
    f.grid_ = grid;
    f.samples_.assign(grid.size(), 0.0);
    f.spectrum_.assign(grid.size(), 0.0);
    return f;
  }

  const Grid& grid() const { return grid_; }
  const std::vector<double>& samples() const { return samples_; }
  const fft::cvec& spectrum() const { return spectrum_; }
  bool empty() const { return samples_.empty(); }

  double max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::abs(v));
    return m;
  }

  friend Field operator+(const Field& a, const Field& b) { return combine(a, b, 1.0); }
  friend Field operator-(const Field& a, const Field& b) { return combine(a, b, -1.0); }
  friend Field operator*(double c, const Field& a) {
    Field r = a;
    for (auto& v : r.samples_) v *= c;
    for (auto& z : r.spectrum_) z *= c;
    return r;
  }

 private:
  // Linear combinations update both representations directly (no transform).
  static Field combine(const Field& a, const Field& b, double sign) {
    require_same_grid(a.grid_, b.grid_, "field combine");
    Field r = a;
    for (std::size_t i = 0; i < r.samples_.size(); ++i) r.samples_[i] += sign * b.samples_[i];
    for (std::size_t i = 0; i < r.spectrum_.size(); ++i) r.spectrum_[i] += sign * b.spectrum_[i];
    return r;
  }

  Grid grid_;
  std::vector<double> samples_;
  fft::cvec spectrum_;
};

}  // namespace critlab
