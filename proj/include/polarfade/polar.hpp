#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "polarfade/bits.hpp"

namespace polarfade {

/// A polar code is the triple (N, K, info set) plus the design SNR it was
/// constructed for. Codewords are x = u * F^(n) where F^(n) is the n-fold
/// Kronecker power of [[1,0],[1,1]], with no bit-reversal permutation on
/// either side; the construction uses matching indices. Info-set indices are
/// 0-based internally (serialization is 1-based, see io.hpp).
class PolarCode {
 public:
  PolarCode(int n, std::vector<int> info_set, double design_snr, double design_eps = 0.0);

  int n() const { return n_; }
  int block_length() const { return 1 << n_; }
  int dimension() const { return static_cast<int>(info_set_.size()); }
  double rate() const { return static_cast<double>(dimension()) / block_length(); }
  /// Ascending, 0-based positions of the information bits in u.
  const std::vector<int>& info_set() const { return info_set_; }
  bool is_frozen(int i) const { return frozen_[static_cast<std::size_t>(i)] != 0; }
  double design_snr() const { return design_snr_; }
  double design_eps() const { return design_eps_; }

 private:
  int n_;
  std::vector<int> info_set_;
  std::vector<std::uint8_t> frozen_;
  double design_snr_;
  double design_eps_;
};

/// x = u * F^(n) over GF(2), in-place butterfly, O(N log N). The transform is
/// an involution. Length must be a power of two.
BitVector transform(BitVector u);

/// Places message bits at the info-set positions (message bit j at the j-th
/// smallest index), zeros elsewhere, and applies the transform.
BitVector encode(const BitVector& message, const PolarCode& code);

/// Successive cancellation decode; returns the K information bits. Erased
/// entries enter the recursion as LLR 0; a decision LLR of exactly 0 decodes
/// to bit 0.
BitVector sc_decode(const SoftVector& observation, const PolarCode& code);

namespace detail {

inline double clamp_llr(double v) { return std::clamp(v, -40.0, 40.0); }

/// Check-node combination f(a,b) = 2 atanh(tanh(a/2) tanh(b/2)). Inputs are
/// clamped to +-40 and the tanh product is kept strictly inside (-1, 1) so
/// near-certain inputs cannot produce an infinite output.
inline double check_node(double a, double b) {
  a = clamp_llr(a);
  b = clamp_llr(b);
  double t = std::tanh(0.5 * a) * std::tanh(0.5 * b);
  constexpr double cap = 1.0 - 1e-15;
  t = std::clamp(t, -cap, cap);
  return 2.0 * std::atanh(t);
}

/// Variable-node combination g(a,b,u) = b + (1-2u) a.
inline double variable_node(double a, double b, int u_bit) {
  return u_bit ? b - a : b + a;
}

// One SC tree node over a sub-code of length m = llr.size(). Decisions land
// in u[u_off .. u_off+m); x_out receives the re-encoded sub-codeword used for
// the partial sums of the g step one level up. Child LLRs live in
// arena[arena_off ..); the slice for this node stays valid while the first
// child recurses into deeper slices.
template <typename DecideFn>
void sc_node(std::span<const double> llr, std::size_t u_off, std::span<std::uint8_t> u,
             std::span<std::uint8_t> x_out, std::span<double> arena, std::size_t arena_off,
             DecideFn& decide) {
  const std::size_t m = llr.size();
  if (m == 1) {
    const int bit = decide(u_off, llr[0]);
    u[u_off] = static_cast<std::uint8_t>(bit);
    x_out[0] = static_cast<std::uint8_t>(bit);
    return;
  }
  const std::size_t h = m / 2;
  std::span<double> child = arena.subspan(arena_off, h);
  for (std::size_t i = 0; i < h; ++i) child[i] = check_node(llr[i], llr[i + h]);
  sc_node(std::span<const double>(child), u_off, u, x_out.first(h), arena, arena_off + h, decide);
  for (std::size_t i = 0; i < h; ++i) child[i] = variable_node(llr[i], llr[i + h], x_out[i]);
  sc_node(std::span<const double>(child), u_off + h, u, x_out.subspan(h), arena, arena_off + h,
          decide);
  for (std::size_t i = 0; i < h; ++i) x_out[i] ^= x_out[i + h];
}

}  // namespace detail

/// SC decode with a caller-supplied decision rule decide(u_index, llr) -> bit,
/// returning the full length-N input-vector estimate. The standard decoder is
/// sc_decode_full with (frozen -> 0, else llr < 0); genie or perturbation
/// experiments substitute their own rule.
template <typename DecideFn>
BitVector sc_decode_full(const SoftVector& observation, const PolarCode& code, DecideFn&& decide) {
  const std::size_t N = static_cast<std::size_t>(code.block_length());
  if (observation.size() != N) {
    throw std::invalid_argument("sc_decode: observation length does not match code block length");
  }
  std::vector<double> channel_llr(N);
  for (std::size_t i = 0; i < N; ++i) channel_llr[i] = observation[i].value_or(0.0);
  std::vector<double> arena(N);
  BitVector u(N);
  BitVector x(N);
  detail::sc_node(std::span<const double>(channel_llr), 0, std::span<std::uint8_t>(u),
                  std::span<std::uint8_t>(x), std::span<double>(arena), 0, decide);
  return u;
}

}  // namespace polarfade
