#pragma once

#include "critlab/dyadic.hpp"

namespace critlab::lp {

/// Paraproduct trichotomy of u * d/dx v over the inhomogeneous family
/// (block 0 = psi, blocks 1..j_max = phi_j):
///
///   low_high = sum_l (S_{l-3} u) d_x(phi_l * v)
///   high_low = sum_l (sum_{k >= l+3} phi_k * u) d_x(phi_l * v)
///   resonant = sum_{|l-k| <= 2} (phi_k * u) d_x(phi_l * v)
///
/// For u == v the resonant part is returned in the symmetric form
/// (1/2) d_x sum_{|l-k| <= 2} (phi_k * u)(phi_l * u), which equals the
/// asymmetric form by the product rule. The three parts sum to u d_x v
/// pointwise whenever the partition reconstructs u and v.
struct BonyParts {
  Field low_high;
  Field high_low;
  Field resonant;

  Field sum() const { return low_high + high_low + resonant; }
};

BonyParts bony_decompose(const Field& u, const Field& v, const DyadicPartition& part);

}  // namespace critlab::lp
