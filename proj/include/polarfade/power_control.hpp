#pragma once

#include "polarfade/fading.hpp"
#include "polarfade/numerics.hpp"

namespace polarfade {

/// Power accounting for the truncated-inversion transmitter: design power P,
/// average budget Q, peak budget Qpeak (+infinity allowed), noise variance.
struct PowerBudget {
  double P;
  double Q;
  double Qpeak;
  double sigma2;
};

/// Inversion threshold: transmit (at power P/H^2) only when |H| >= delta,
/// with delta = max(delta_bar, sqrt(P/Qpeak)).
struct InversionPolicy {
  double delta;
  double delta_bar;
  double delta_peak;
};

/// Expected transmit energy per slot at threshold delta:
/// P * E[H^-2 ; |H| >= delta]. Returns +infinity when delta = 0 and the
/// inverse-square moment diverges (e.g. Gaussian fading).
double expended_power(double p, double delta, const FadingModel& fading,
                      const QuadratureSpec& quad = {});

/// Smallest threshold (to 1e-10) at which the expended power fits the average
/// budget: expended_power is nonincreasing in delta, so a doubling bracket
/// plus bisection applies. Returns 0 when full inversion is already
/// affordable. The returned value is always on the feasible side of the
/// bracket, so the budget is met, not just approached.
double solve_delta_bar(const PowerBudget& budget, const FadingModel& fading,
                       const QuadratureSpec& quad = {});

/// Peak-power threshold sqrt(P/Qpeak); 0 when qpeak = +infinity.
double peak_threshold(double p, double qpeak);

InversionPolicy make_policy(const PowerBudget& budget, const FadingModel& fading,
                            const QuadratureSpec& quad = {});

/// Erasure (outage) probability P(|H| < delta).
double erasure_prob(double delta, const FadingModel& fading);

}  // namespace polarfade
