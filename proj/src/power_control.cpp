#include "polarfade/power_control.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polarfade {

namespace {

void check_budget(const PowerBudget& budget) {
  if (!(budget.P > 0.0)) throw std::invalid_argument("PowerBudget: design power must be positive");
  if (!(budget.Q > 0.0)) throw std::invalid_argument("PowerBudget: average budget must be positive");
  if (!(budget.Qpeak > 0.0)) throw std::invalid_argument("PowerBudget: peak budget must be positive");
  if (!(budget.sigma2 > 0.0)) {
    throw std::invalid_argument("PowerBudget: noise variance must be positive");
  }
}

}  // namespace

double expended_power(double p, double delta, const FadingModel& fading,
                      const QuadratureSpec& quad) {
  if (!(p > 0.0)) throw std::invalid_argument("expended_power: P must be positive");
  if (delta < 0.0) throw std::invalid_argument("expended_power: delta must be nonnegative");
  return p * fading.inverse_square_mass(delta, quad);
}

double solve_delta_bar(const PowerBudget& budget, const FadingModel& fading,
                       const QuadratureSpec& quad) {
  check_budget(budget);
  auto spent = [&](double delta) { return expended_power(budget.P, delta, fading, quad); };
  if (spent(0.0) <= budget.Q) return 0.0;  // full inversion affordable

  // Bracket from above: walk the threshold down by octaves until the budget
  // is exceeded, so the quadrature never has to resolve thresholds far below
  // the root.
  double hi = 1.0;
  int guard = 0;
  while (spent(hi) > budget.Q) {
    hi *= 2.0;
    if (++guard > 200) throw NumericError("solve_delta_bar: no affordable threshold found");
  }
  double lo = 0.5 * hi;
  guard = 0;
  while (lo > 1e-300 && spent(lo) <= budget.Q) {
    hi = lo;
    lo *= 0.5;
    if (++guard > 1100) break;
  }
  // Expended power jumps to above Q only at delta = 0 (atom at the origin):
  // any positive threshold fits the budget.
  if (lo <= 1e-300) return hi;
  if (hi <= 1e-10) return hi;

  auto affordable = [&](double delta) { return spent(delta) <= budget.Q; };
  return bisect_transition(affordable, lo, hi, 1e-10);
}

double peak_threshold(double p, double qpeak) {
  if (!(p > 0.0)) throw std::invalid_argument("peak_threshold: P must be positive");
  if (!(qpeak > 0.0)) throw std::invalid_argument("peak_threshold: Qpeak must be positive");
  if (std::isinf(qpeak)) return 0.0;
  return std::sqrt(p / qpeak);
}

InversionPolicy make_policy(const PowerBudget& budget, const FadingModel& fading,
                            const QuadratureSpec& quad) {
  check_budget(budget);
  const double delta_bar = solve_delta_bar(budget, fading, quad);
  const double delta_peak = peak_threshold(budget.P, budget.Qpeak);
  return InversionPolicy{std::max(delta_bar, delta_peak), delta_bar, delta_peak};
}

double erasure_prob(double delta, const FadingModel& fading) {
  if (delta < 0.0) throw std::invalid_argument("erasure_prob: delta must be nonnegative");
  return fading.outage_mass(delta);
}

}  // namespace polarfade
