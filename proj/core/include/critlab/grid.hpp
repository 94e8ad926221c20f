#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace critlab {

/// Uniform periodic grid on the torus [-L, L)^dim.
///
/// Points per axis n must be a power of two (n >= 8). Grid spacing is
/// dx = 2L/n and the resolved frequencies are the conjugate-symmetric
/// ladder xi_k = pi*k/L for k in [-n/2, n/2).
struct Grid {
  int dim = 1;        // 1 or 2
  int n = 0;          // points per axis
  double L = 0.0;     // half-period

  Grid() = default;
  Grid(int dim_, int n_, double L_) : dim(dim_), n(n_), L(L_) { validate(); }

  static Grid line(int n, double L) { return Grid(1, n, L); }
  static Grid plane(int n, double L) { return Grid(2, n, L); }

  void validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid: dim must be 1 or 2");
    if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("grid: n must be a power of two >= 8");
    if (!(L > 0.0)) throw std::invalid_argument("grid: L must be positive");
  }

  double dx() const { return 2.0 * L / n; }
  std::size_t size() const { return dim == 1 ? std::size_t(n) : std::size_t(n) * n; }

  /// Physical coordinate of sample i along one axis, in [-L, L).
  double x(int i) const { return -L + dx() * i; }

  /// Signed integer mode index for storage index k in [0, n).
  int mode(int k) const { return k < n / 2 ? k : k - n; }

  /// Scalar frequency xi = pi * mode / L for storage index k.
  double freq(int k) const { return M_PI * mode(k) / L; }

  /// Largest resolved |xi| (the Nyquist line).
  double freq_max() const { return M_PI * (n / 2) / L; }

  /// Smallest positive resolved |xi|.
  double freq_min() const { return M_PI / L; }

  /// Radial frequency |xi| for a flattened storage index (dim-aware).
  double freq_radial(std::size_t idx) const {
    if (dim == 1) return std::abs(freq(int(idx)));
    const double fx = freq(int(idx / n));
    const double fy = freq(int(idx % n));
    return std::sqrt(fx * fx + fy * fy);
  }

  bool operator==(const Grid& o) const { return dim == o.dim && n == o.n && L == o.L; }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

}  // namespace critlab
