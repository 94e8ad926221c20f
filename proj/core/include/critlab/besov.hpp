#pragma once

#include <span>

#include "critlab/dyadic.hpp"

namespace critlab::lp {

/// Besov regularity/integrability triple (s, p, q); the homogeneous flag
/// selects the dotted scale (no low-frequency term, full dyadic band).
struct BesovIndex {
  double s = 0.0;
  double p = spectral::kInf;
  double q = 1.0;
  bool homogeneous = true;

  void validate() const;
};

/// Time-integrated (Chemin-Lerner) index: L^r in time taken per block
/// before the l^q sum over blocks.
struct TrajectoryNormIndex {
  double r = 1.0;
  double T = 0.0;
  BesovIndex besov;

  void validate() const;
};

/// Snapshot view used by trajectory norms; fields are not owned.
struct TimeSample {
  double t = 0.0;
  const Field* field = nullptr;
};

/// Discrete evaluation of the Besov norm over the partition's band.
double besov_norm(const Field& f, const BesovIndex& idx, const DyadicPartition& part);

/// Fraction of spectral l2 mass outside the band the partition covers
/// (mode 0 is not counted for homogeneous coverage). Reported next to
/// truncated homogeneous norms so band truncation stays visible.
double band_tail_fraction(const Field& f, const DyadicPartition& part, bool homogeneous = true);

/// Chemin-Lerner norm over time samples covering [0, T]: per block the
/// L^r(0,T) norm of t -> ||phi_j * u(t)||_Lp (trapezoid quadrature), then
/// the l^q sum over blocks. Throws if the samples do not reach T.
double chemin_lerner_norm(std::span<const TimeSample> samples, const TrajectoryNormIndex& idx,
                          const DyadicPartition& part);

/// L^r(0,T) trapezoid norm of a scalar time series (r = kInf gives sup).
double time_lr_norm(std::span<const double> times, std::span<const double> values, double r,
                    double T);

}  // namespace critlab::lp
