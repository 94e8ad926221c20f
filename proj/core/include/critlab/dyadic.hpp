#pragma once

#include <vector>

#include "critlab/field.hpp"
#include "critlab/spectral.hpp"

namespace critlab::lp {

/// Dyadic Littlewood-Paley family on a grid's frequency ladder.
///
/// phi_hat(j) is supported in {3/4 * 2^j <= |xi| <= 2^(j+1)} (inside the
/// standard annulus {2^(j-1) <= |xi| <= 2^(j+1)}), equals 1 on
/// [2^j, 3/2 * 2^j], and the family telescopes exactly:
///   sum_{j in Z} phi_hat_j = 1 away from xi = 0,
///   psi_hat + sum_{j >= 1} phi_hat_j = 1 everywhere,
/// with supp psi_hat in {|xi| <= 2}. Blocks are built by scaling a single
/// C^inf profile, so both identities hold to roundoff by construction.
class DyadicPartition {
 public:
  DyadicPartition(const Grid& grid, int j_min, int j_max);

  const Grid& grid() const { return grid_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  bool in_band(int j) const { return j >= j_min_ && j <= j_max_; }

  /// Frequency table of phi_hat_j over the grid bins.
  const std::vector<double>& phi_hat(int j) const;

  /// Low-frequency cutoff psi_hat (inhomogeneous family, anchored at j=1).
  const std::vector<double>& psi_hat() const { return psi_; }

  /// S_j = psi + sum_{1 <= k <= j} phi_k as a single table; S_j = 0 for j < 0,
  /// S_0 = psi.
  std::vector<double> partial_sum_hat(int j) const;

  // Scalar profiles (radial in |xi|).
  static double phi0_profile(double xi);
  static double psi_profile(double xi);

 private:
  Grid grid_;
  int j_min_, j_max_;
  std::vector<std::vector<double>> phi_;  // [j - j_min]
  std::vector<double> psi_;
};

DyadicPartition build_partition(const Grid& grid, int j_min, int j_max);

/// Default band for a grid: the widest [j_min, j_max] the resolution admits.
void default_band(const Grid& grid, int& j_min, int& j_max);

Field block_project(const Field& f, const DyadicPartition& part, int j);
Field low_project(const Field& f, const DyadicPartition& part);
Field partial_sum(const Field& f, const DyadicPartition& part, int j);

/// ||phi_j * f||_Lp without materializing a Field when p is given.
double block_lp(const Field& f, const DyadicPartition& part, int j, double p);
double low_lp(const Field& f, const DyadicPartition& part, double p);

/// ||grad(phi_j * f)||_inf / (2^j ||phi_j * f||_inf); throws on a zero block.
double bernstein_ratio(const Field& f, int j, const DyadicPartition& part);

}  // namespace critlab::lp
