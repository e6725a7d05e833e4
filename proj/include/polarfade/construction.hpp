#pragma once

#include <vector>

#include "polarfade/polar.hpp"

namespace polarfade {

/// Bhattacharyya parameter of a BPSK-input AWGN channel at the given linear
/// design SNR P/sigma^2: Z = exp(-snr).
double initial_z_awgn(double snr);

/// Bhattacharyya parameter of the AWGN channel cascaded with an independent
/// erasure channel of rate eps: the erasure output contributes weight eps at
/// Z = 1, so Z = eps + (1-eps) exp(-snr).
double initial_z_mixture(double snr, double eps);

/// Applies the Bhattacharyya evolution n times starting from Z = z0. Each
/// level maps Z to the pair (2Z - Z^2, Z^2): the odd output index is the
/// check-side synthesized channel (decoded first, less reliable) and the even
/// index the variable-side one, matching the SC decode schedule of
/// sc_decode. Entry j (0-based) of the result bounds the reliability of input
/// bit u_j. Both maps preserve [0,1] and their sum conserves 2Z exactly.
std::vector<double> evolve_z(double z0, int n);

/// Indices of the k smallest entries (most reliable synthesized channels),
/// ties broken toward the smaller index, returned ascending and 0-based.
std::vector<int> select_info_set(const std::vector<double>& z, int k);

/// Full construction: initialize (eps = 0 gives the plain AWGN design,
/// eps > 0 the erasure-mixture design), evolve, select.
PolarCode construct(int block_length, int k, double design_snr, double eps = 0.0);

}  // namespace polarfade
