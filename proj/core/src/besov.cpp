#include "critlab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace critlab::lp {

void BesovIndex::validate() const {
  if (p < 1.0 || q < 1.0) throw std::invalid_argument("besov: p, q must be >= 1");
}

void TrajectoryNormIndex::validate() const {
  besov.validate();
  if (r < 1.0) throw std::invalid_argument("trajectory norm: r must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("trajectory norm: T must be positive");
}

namespace {

double lq_accumulate(const std::vector<double>& terms, double q) {
  if (q == spectral::kInf) {
    double m = 0.0;
    for (double v : terms) m = std::max(m, v);
    return m;
  }
  double acc = 0.0;
  for (double v : terms) acc += std::pow(v, q);
  return std::pow(acc, 1.0 / q);
}

}  // namespace

double besov_norm(const Field& f, const BesovIndex& idx, const DyadicPartition& part) {
  idx.validate();
  require_same_grid(f.grid(), part.grid(), "besov_norm");
  std::vector<double> terms;
  const int j_lo = idx.homogeneous ? part.j_min() : std::max(1, part.j_min());
  for (int j = j_lo; j <= part.j_max(); ++j)
    terms.push_back(std::pow(2.0, idx.s * j) * block_lp(f, part, j, idx.p));
  double norm = lq_accumulate(terms, idx.q);
  if (!idx.homogeneous) norm += low_lp(f, part, idx.p);
  return norm;
}

double band_tail_fraction(const Field& f, const DyadicPartition& part, bool homogeneous) {
  const Grid& g = f.grid();
  std::vector<double> coverage(g.size(), 0.0);
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    const auto& tab = part.phi_hat(j);
    for (std::size_t i = 0; i < coverage.size(); ++i) coverage[i] += tab[i];
  }
  if (!homogeneous) {
    const auto& psi = part.psi_hat();
    for (std::size_t i = 0; i < coverage.size(); ++i) coverage[i] += psi[i];
  }
  const auto& spec = f.spectrum();
  double tail = 0.0, total = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (homogeneous && i == 0) continue;  // homogeneous scale ignores the mean
    const double e = std::norm(spec[i]);
    total += e;
    if (coverage[i] < 1.0 - 1e-12) tail += e;
  }
  return total > 0.0 ? std::sqrt(tail / total) : 0.0;
}

double time_lr_norm(std::span<const double> times, std::span<const double> values, double r,
                    double T) {
  if (times.size() != values.size() || times.size() < 2)
    throw std::invalid_argument("time norm: need at least two samples");
  if (times.front() > 1e-9 * T || times.back() < T * (1.0 - 1e-9))
    throw std::invalid_argument("time norm: horizon exceeds sampled range");
  if (r == spectral::kInf) {
    double m = 0.0;
    for (std::size_t i = 0; i < times.size() && times[i] <= T * (1.0 + 1e-12); ++i)
      m = std::max(m, std::abs(values[i]));
    return m;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    double t0 = times[i], t1 = times[i + 1];
    if (t0 >= T) break;
    double v0 = std::pow(std::abs(values[i]), r);
    double v1 = std::pow(std::abs(values[i + 1]), r);
    if (t1 > T) {  // truncate the last segment at T
      const double w = (T - t0) / (t1 - t0);
      v1 = v0 + w * (v1 - v0);
      t1 = T;
    }
    acc += 0.5 * (v0 + v1) * (t1 - t0);
  }
  return std::pow(acc, 1.0 / r);
}

double chemin_lerner_norm(std::span<const TimeSample> samples, const TrajectoryNormIndex& idx,
                          const DyadicPartition& part) {
  idx.validate();
  if (samples.size() < 2) throw std::invalid_argument("chemin-lerner: need >= 2 snapshots");
  std::vector<double> times(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    times[i] = samples[i].t;
    require_same_grid(samples[i].field->grid(), part.grid(), "chemin-lerner");
  }

  std::vector<double> series(samples.size());
  std::vector<double> terms;
  const int j_lo = idx.besov.homogeneous ? part.j_min() : std::max(1, part.j_min());
  for (int j = j_lo; j <= part.j_max(); ++j) {
    for (std::size_t i = 0; i < samples.size(); ++i)
      series[i] = block_lp(*samples[i].field, part, j, idx.besov.p);
    terms.push_back(std::pow(2.0, idx.besov.s * j) * time_lr_norm(times, series, idx.r, idx.T));
  }
  double norm = lq_accumulate(terms, idx.besov.q);
  if (!idx.besov.homogeneous) {
    for (std::size_t i = 0; i < samples.size(); ++i)
      series[i] = low_lp(*samples[i].field, part, idx.besov.p);
    norm += time_lr_norm(times, series, idx.r, idx.T);
  }
  return norm;
}

}  // namespace critlab::lp
