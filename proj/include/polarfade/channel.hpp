#pragma once

#include "polarfade/bits.hpp"
#include "polarfade/fading.hpp"
#include "polarfade/polar.hpp"
#include "polarfade/power_control.hpp"
#include "polarfade/rng.hpp"

namespace polarfade {

/// One slot of the online transmitter: the power actually spent and the real
/// constellation symbol (0 when the slot is skipped). symbol^2 == power_T.
struct TransmitDecision {
  double power_T;
  double symbol;
};

/// Receiver view of one slot: a real sample, or an erasure when the
/// transmitter skipped (the receiver knows H and the policy, so skip events
/// coincide exactly on both sides).
using ChannelObservation = SoftSymbol;

struct DemodResult {
  ChannelObservation observation;
  SoftSymbol llr;
};

/// Online transmitter step: skip when |h| < policy.delta (h = 0 with a zero
/// threshold also skips -- the inversion would need infinite power);
/// otherwise invert, T = P/h^2, symbol = sign(h) * (-1)^bit * sqrt(T).
TransmitDecision transmit_symbol(int x_bit, double h, double p, const InversionPolicy& policy);

/// Fading AWGN channel: y = h * symbol + eta, eta ~ N(0, sigma2).
double propagate(const TransmitDecision& decision, double h, double sigma2, Rng& rng);

/// CSIR-side processing: erases skipped slots, otherwise the inverted channel
/// is exactly BPSK(sqrt(P)) + AWGN(sigma2), so llr = 2 sqrt(P) y / sigma2
/// (natural log, positive favors bit 0).
DemodResult demodulate(double y, double h, double p, double sigma2, const InversionPolicy& policy);

struct BlockDiagnostics {
  int erasures = 0;
  double total_energy = 0.0;
  double peak_power = 0.0;
};

struct BlockResult {
  BitVector decoded;
  BlockDiagnostics diagnostics;
};

/// Full per-block pipeline: encode, then per symbol sample H, transmit,
/// propagate, demodulate; finally SC-decode the soft vector.
BlockResult simulate_block(const PolarCode& code, const BitVector& message,
                           const PowerBudget& budget, const FadingModel& fading,
                           const InversionPolicy& policy, Rng& rng);

/// The equivalent cascade channel: erase with probability eps, else transmit
/// the BPSK symbol over AWGN. Erasures are independent of the AWGN output.
ChannelObservation cascade_channel(int x_bit, double eps, double p, double sigma2, Rng& rng);

}  // namespace polarfade
