#include "polarfade/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polarfade {

TransmitDecision transmit_symbol(int x_bit, double h, double p, const InversionPolicy& policy) {
  if (!(p > 0.0)) throw std::invalid_argument("transmit_symbol: P must be positive");
  const double mag = std::abs(h);
  if (mag < policy.delta || mag == 0.0) return TransmitDecision{0.0, 0.0};
  const double t = p / (h * h);
  const double sign = h > 0.0 ? 1.0 : -1.0;
  const double symbol = sign * ((x_bit & 1) ? -1.0 : 1.0) * std::sqrt(t);
  return TransmitDecision{t, symbol};
}

double propagate(const TransmitDecision& decision, double h, double sigma2, Rng& rng) {
  if (sigma2 < 0.0) throw std::invalid_argument("propagate: noise variance must be nonnegative");
  return h * decision.symbol + std::sqrt(sigma2) * normal_sample(rng);
}

DemodResult demodulate(double y, double h, double p, double sigma2, const InversionPolicy& policy) {
  if (!(p > 0.0)) throw std::invalid_argument("demodulate: P must be positive");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("demodulate: noise variance must be positive");
  const double mag = std::abs(h);
  if (mag < policy.delta || mag == 0.0) return DemodResult{kErased, kErased};
  const double llr = 2.0 * std::sqrt(p) * y / sigma2;
  return DemodResult{y, llr};
}

BlockResult simulate_block(const PolarCode& code, const BitVector& message,
                           const PowerBudget& budget, const FadingModel& fading,
                           const InversionPolicy& policy, Rng& rng) {
  const BitVector x = encode(message, code);
  const std::size_t N = x.size();
  SoftVector observation(N);
  BlockDiagnostics diag;
  for (std::size_t k = 0; k < N; ++k) {
    const double h = fading.sample(rng);
    const TransmitDecision d = transmit_symbol(x[k], h, budget.P, policy);
    const double y = propagate(d, h, budget.sigma2, rng);
    const DemodResult r = demodulate(y, h, budget.P, budget.sigma2, policy);
    observation[k] = r.llr;
    if (!r.observation.has_value()) ++diag.erasures;
    diag.total_energy += d.power_T;
    diag.peak_power = std::max(diag.peak_power, d.power_T);
  }
  return BlockResult{sc_decode(observation, code), diag};
}

ChannelObservation cascade_channel(int x_bit, double eps, double p, double sigma2, Rng& rng) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("cascade_channel: eps must lie in [0,1]");
  }
  if (uniform01(rng) < eps) return kErased;
  const double mean = ((x_bit & 1) ? -1.0 : 1.0) * std::sqrt(p);
  return mean + std::sqrt(sigma2) * normal_sample(rng);
}

}  // namespace polarfade
