#include "critlab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace critlab::fft {
namespace {

// Plan cache keyed by (dim, n, sign). Plans are created with
// FFTW_ESTIMATE | FFTW_UNALIGNED so the planner choice is deterministic
// and execution works on arbitrary std::vector storage.
class PlanCache {
 public:
  fftw_plan get(int dim, int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(dim, n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::size_t total = dim == 1 ? std::size_t(n) : std::size_t(n) * n;
    cvec scratch_in(total), scratch_out(total);
    auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan p = dim == 1 ? fftw_plan_dft_1d(n, in, out, sign, flags)
                           : fftw_plan_dft_2d(n, n, in, out, sign, flags);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans_[key] = p;
    return p;
  }

  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(const Grid& grid, int sign, const cvec& in, cvec& out) {
  fftw_plan p = cache().get(grid.dim, grid.n, sign);
  out.resize(in.size());
  // new-array execute; cast is the standard std::complex <-> fftw_complex interop
  fftw_execute_dft(p,
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

cvec forward(const Grid& grid, const std::vector<double>& samples) {
  if (samples.size() != grid.size()) throw std::invalid_argument("fft: sample count mismatch");
  cvec in(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) throw std::invalid_argument("fft: non-finite sample");
    in[i] = samples[i];
  }
  cvec out;
  execute(grid, FFTW_FORWARD, in, out);
  return out;
}

cvec forward_c(const Grid& grid, const cvec& in) {
  if (in.size() != grid.size()) throw std::invalid_argument("fft: size mismatch");
  cvec out;
  execute(grid, FFTW_FORWARD, in, out);
  return out;
}

cvec inverse_c(const Grid& grid, const cvec& coeffs) {
  if (coeffs.size() != grid.size()) throw std::invalid_argument("fft: size mismatch");
  cvec out;
  execute(grid, FFTW_BACKWARD, coeffs, out);
  const double scale = 1.0 / double(grid.size());
  for (auto& z : out) z *= scale;
  return out;
}

std::vector<double> inverse_real(const Grid& grid, const cvec& coeffs, double imag_tol) {
  cvec z = inverse_c(grid, coeffs);
  double max_abs = 0.0, max_imag = 0.0;
  for (const auto& v : z) {
    max_abs = std::max(max_abs, std::abs(v.real()));
    max_imag = std::max(max_imag, std::abs(v.imag()));
  }
  if (max_imag > imag_tol * std::max(max_abs, 1e-300))
    throw std::runtime_error("fft: inverse produced non-negligible imaginary part");
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
  return out;
}

}  // namespace critlab::fft
