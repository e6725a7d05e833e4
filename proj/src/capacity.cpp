#include "polarfade/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "polarfade/power_control.hpp"

namespace polarfade {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_channel_args(double p, double sigma2) {
  if (p < 0.0) throw std::invalid_argument("signal power must be nonnegative");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("noise variance must be positive");
}

}  // namespace

double output_density(double y, double p, double sigma2) {
  check_channel_args(p, sigma2);
  const double a = std::sqrt(p);
  return 0.5 * (normal_pdf(y, a, sigma2) + normal_pdf(y, -a, sigma2));
}

double bi_awgn_output_entropy(double p, double sigma2, const QuadratureSpec& quad) {
  check_channel_args(p, sigma2);
  const double a = std::sqrt(p);
  const double half_width = a + quad.range_sigmas * std::sqrt(sigma2);
  auto integrand = [p, sigma2](double y) {
    const double f = output_density(y, p, sigma2);
    return f > 0.0 ? -f * std::log2(f) : 0.0;  // f log f -> 0 at f = 0
  };
  return integrate(integrand, -half_width, half_width, quad);
}

double bi_awgn_capacity(double p, double sigma2, const QuadratureSpec& quad) {
  const double h_y = bi_awgn_output_entropy(p, sigma2, quad);
  const double h_noise = 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * sigma2);
  return std::clamp(h_y - h_noise, 0.0, 1.0);
}

double solve_design_power(double rate, double sigma2, const QuadratureSpec& quad) {
  if (!(rate > 0.0 && rate < 1.0)) {
    throw std::invalid_argument("solve_design_power: rate must lie in (0,1)");
  }
  if (!(sigma2 > 0.0)) throw std::invalid_argument("solve_design_power: noise variance must be positive");
  double lo = 0.0;
  double hi = std::max(sigma2, 1.0);
  int guard = 0;
  while (bi_awgn_capacity(hi, sigma2, quad) < rate) {
    hi *= 2.0;
    if (++guard > 80) throw NumericError("solve_design_power: failed to bracket the target rate");
  }
  double mid = hi;
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    const double c = bi_awgn_capacity(mid, sigma2, quad);
    if (std::abs(c - rate) <= 1e-9) return mid;
    (c < rate ? lo : hi) = mid;
    if (hi - lo <= 1e-13 * std::max(1.0, hi)) break;
  }
  return mid;
}

double equivalent_capacity(double c_awgn, double eps) {
  if (!(c_awgn >= 0.0 && c_awgn <= 1.0)) {
    throw std::invalid_argument("equivalent_capacity: c_awgn must lie in [0,1]");
  }
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("equivalent_capacity: eps must lie in [0,1]");
  }
  return (1.0 - eps) * c_awgn;
}

DesignOptimum optimize_design_power(double q, double qpeak, double sigma2,
                                    const FadingModel& fading, const QuadratureSpec& quad,
                                    DesignObjective objective) {
  if (!(q > 0.0)) throw std::invalid_argument("optimize_design_power: Q must be positive");
  if (!(qpeak > 0.0)) throw std::invalid_argument("optimize_design_power: Qpeak must be positive");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("optimize_design_power: noise variance must be positive");

  auto eps_of = [&](double p) {
    const PowerBudget budget{p, q, qpeak, sigma2};
    return erasure_prob(make_policy(budget, fading, quad).delta, fading);
  };
  auto value_of = [&](double p) {
    const double eps = eps_of(p);
    if (eps >= 1.0) return 0.0;
    const double r = objective == DesignObjective::throughput
                         ? bi_awgn_capacity(p, sigma2, quad)
                         : bi_awgn_output_entropy(p, sigma2, quad);
    return (1.0 - eps) * r;
  };

  // Log-spaced scan to bracket the maximum, extending upward while the best
  // point keeps landing on the upper edge (only possible with qpeak = inf).
  double p_lo = 1e-6 * std::min(q, sigma2);
  double p_hi = std::isfinite(qpeak) ? qpeak : 64.0 * std::max(q, sigma2);
  const int points = 49;
  std::vector<double> ps, js;
  std::size_t best = 0;
  for (int expand = 0; expand < 12; ++expand) {
    ps.clear();
    js.clear();
    const double log_lo = std::log(p_lo);
    const double log_hi = std::log(p_hi);
    for (int i = 0; i < points; ++i) {
      const double p = std::exp(log_lo + (log_hi - log_lo) * i / (points - 1));
      ps.push_back(p);
      js.push_back(value_of(p));
    }
    best = 0;
    for (std::size_t i = 1; i < ps.size(); ++i) {
      if (js[i] > js[best]) best = i;
    }
    if (best == ps.size() - 1 && !std::isfinite(qpeak)) {
      p_hi *= 64.0;
      continue;
    }
    if (best == 0 && js[0] > 0.0) {
      p_lo *= 1e-3;
      continue;
    }
    break;
  }
  if (js[best] <= 0.0) {
    throw InfeasibleError("optimize_design_power: objective is zero for every design power "
                          "(erasure probability 1 throughout)");
  }

  const double bracket_lo = best > 0 ? ps[best - 1] : ps[best];
  const double bracket_hi = best + 1 < ps.size() ? ps[best + 1] : ps[best];
  auto neg = [&](double p) { return -value_of(p); };
  const double p_star = golden_section_min(neg, bracket_lo, bracket_hi, 1e-6);
  return DesignOptimum{p_star, bi_awgn_capacity(p_star, sigma2, quad), eps_of(p_star)};
}

}  // namespace polarfade
