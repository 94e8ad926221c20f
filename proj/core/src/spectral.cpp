#include "critlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace critlab::spectral {

void check_conjugate_symmetric(const Grid& grid, const mvec& m, const fft::cvec* input) {
  const int n = grid.n;
  double mmax = 0.0;
  for (const auto& z : m) mmax = std::max(mmax, std::abs(z));
  const double tol = 1e-12 * std::max(mmax, 1.0);

  double in_max = 0.0;
  if (input)
    for (const auto& z : *input) in_max = std::max(in_max, std::abs(z));

  auto partner_ok = [&](std::size_t idx, std::size_t pidx) {
    if (idx == pidx) {
      // self-paired (Nyquist/zero) bin: multiplier must be real there
      // unless the input carries nothing at that bin
      if (std::abs(m[idx].imag()) <= tol) return true;
      if (input && std::abs((*input)[idx]) <= 1e-12 * std::max(in_max, 1e-300)) return true;
      return false;
    }
    return std::abs(m[pidx] - std::conj(m[idx])) <= tol;
  };

  if (grid.dim == 1) {
    for (int k = 0; k < n; ++k) {
      std::size_t p = std::size_t((n - k) % n);
      if (!partner_ok(k, p))
        throw std::invalid_argument("multiplier: not conjugate-symmetric for real output");
    }
  } else {
    for (int kx = 0; kx < n; ++kx)
      for (int ky = 0; ky < n; ++ky) {
        std::size_t idx = std::size_t(kx) * n + ky;
        std::size_t p = std::size_t((n - kx) % n) * n + std::size_t((n - ky) % n);
        if (!partner_ok(idx, p))
          throw std::invalid_argument("multiplier: not conjugate-symmetric for real output");
      }
  }
}

fft::cvec apply_multiplier_spec(const Grid& grid, const fft::cvec& in, const mvec& m) {
  if (in.size() != grid.size() || m.size() != grid.size())
    throw std::invalid_argument("apply_multiplier: size mismatch");
  fft::cvec out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!std::isfinite(m[i].real()) || !std::isfinite(m[i].imag()))
      throw std::invalid_argument("apply_multiplier: non-finite multiplier value");
    out[i] = m[i] * in[i];
  }
  return out;
}

Field apply_multiplier(const Field& f, const mvec& m, Realness realness) {
  if (realness == Realness::enforce) {
    const fft::cvec& spec = f.spectrum();
    check_conjugate_symmetric(f.grid(), m, &spec);
  }
  return Field::from_spectrum(f.grid(), apply_multiplier_spec(f.grid(), f.spectrum(), m));
}

void dealias_spec(const Grid& grid, fft::cvec& coeffs) {
  const int n = grid.n;
  const int cut = dealias_cutoff(n);
  if (grid.dim == 1) {
    for (int k = 0; k < n; ++k)
      if (std::abs(grid.mode(k)) > cut) coeffs[k] = 0.0;
  } else {
    for (int kx = 0; kx < n; ++kx) {
      const bool kill_x = std::abs(grid.mode(kx)) > cut;
      for (int ky = 0; ky < n; ++ky)
        if (kill_x || std::abs(grid.mode(ky)) > cut) coeffs[std::size_t(kx) * n + ky] = 0.0;
    }
  }
}

Field dealias(const Field& f) {
  fft::cvec c = f.spectrum();
  dealias_spec(f.grid(), c);
  return Field::from_spectrum(f.grid(), c);
}

double lp_norm_samples(const Grid& grid, const std::vector<double>& samples, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (p == kInf) {
    double m = 0.0;
    for (double v : samples) m = std::max(m, std::abs(v));
    return m;
  }
  const double cell = grid.dim == 1 ? grid.dx() : grid.dx() * grid.dx();
  double acc = 0.0;
  if (p == 1.0) {
    for (double v : samples) acc += std::abs(v);
  } else if (p == 2.0) {
    for (double v : samples) acc += v * v;
  } else {
    for (double v : samples) acc += std::pow(std::abs(v), p);
  }
  return std::pow(acc * cell, 1.0 / p);
}

double lp_norm(const Field& f, double p) { return lp_norm_samples(f.grid(), f.samples(), p); }

Field derivative(const Field& f, int axis) {
  return Field::from_spectrum(f.grid(), derivative_spec(f.grid(), f.spectrum(), axis));
}

fft::cvec derivative_spec(const Grid& grid, const fft::cvec& in, int axis) {
  if (axis < 0 || axis >= grid.dim) throw std::invalid_argument("derivative: bad axis");
  const int n = grid.n;
  fft::cvec out(in.size());
  const std::complex<double> I(0.0, 1.0);
  if (grid.dim == 1) {
    for (int k = 0; k < n; ++k) {
      // the Nyquist mode has no conjugate partner; drop it
      out[k] = (grid.mode(k) == -n / 2) ? 0.0 : I * grid.freq(k) * in[k];
    }
  } else {
    for (int kx = 0; kx < n; ++kx)
      for (int ky = 0; ky < n; ++ky) {
        std::size_t idx = std::size_t(kx) * n + ky;
        int km = axis == 0 ? grid.mode(kx) : grid.mode(ky);
        double xi = axis == 0 ? grid.freq(kx) : grid.freq(ky);
        out[idx] = (km == -n / 2) ? 0.0 : I * xi * in[idx];
      }
  }
  return out;
}

double parseval_l2(const Grid& grid, const fft::cvec& coeffs) {
  const double cell = grid.dim == 1 ? grid.dx() : grid.dx() * grid.dx();
  double acc = 0.0;
  for (const auto& z : coeffs) acc += std::norm(z);
  return std::sqrt(acc * cell / double(grid.size()));
}

double integral(const Field& f) {
  const Grid& g = f.grid();
  const double cell = g.dim == 1 ? g.dx() : g.dx() * g.dx();
  return f.spectrum()[0].real() * cell;
}

}  // namespace critlab::spectral
