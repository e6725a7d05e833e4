#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "polarfade/capacity.hpp"
#include "polarfade/channel.hpp"
#include "polarfade/fading.hpp"

namespace polarfade {

enum class Scheme { proposed, mixture_design };

std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& text);

/// Parameters shared by the sweep campaigns. Every output is a pure function
/// of this struct: per-trial RNG streams derive from (master_seed, grid
/// point, trial index), early stopping is evaluated at fixed batch
/// boundaries over trial-index prefixes, and accumulators are integer counts,
/// so results do not depend on execution order or thread count.
struct CampaignConfig {
  int n = 6;          // log2 block length
  int k = 0;          // 0: round(rate * N)
  double rate = 0.5;  // target K/N when k == 0; design rate for Eq.-(3) power
  double sigma2 = 1.0;
  double qpeak = std::numeric_limits<double>::infinity();
  std::vector<double> q_grid;
  FadingSpec fading{};
  std::vector<Scheme> schemes{Scheme::proposed};
  std::uint64_t master_seed = 1;
  long long max_trials = 10000;
  long long target_bit_errors = 100;  // early stop checked at batch boundaries
  int batch_size = 256;
  int threads = 0;  // 0: hardware concurrency
  double design_power = 0.0;  // 0: solve from rate via the capacity equation
  QuadratureSpec quad{};
};

struct BerPoint {
  double q;
  Scheme scheme;
  int block_length;
  int dimension;
  long long trials;
  long long bit_errors;
  long long block_errors;
  double ber;
  double bler;
  double ci95_halfwidth;
};

struct EpsPoint {
  double q;
  double sigma_h2;
  double p_design;
  double delta;
  double epsilon;
};

struct RatePoint {
  double q;
  double p_star;
  double r_star;
  double eps_star;
};

struct EpsSweepConfig {
  double rate = 0.5;
  double sigma2 = 1.0;
  double qpeak = std::numeric_limits<double>::infinity();
  std::vector<double> q_grid;
  std::vector<double> sigma_h2_grid{1.0};
  QuadratureSpec quad{};
};

struct RateSweepConfig {
  double sigma2 = 1.0;
  double qpeak = std::numeric_limits<double>::infinity();
  std::vector<double> q_grid;
  FadingSpec fading{};
  DesignObjective objective = DesignObjective::throughput;
  QuadratureSpec quad{};
};

/// Erasure probability against operating power: per Q, solve the design
/// power from the rate, build the policy, read off epsilon. Purely
/// numerical. Rows are grouped by sigma_h2, Q ascending within a group.
std::vector<EpsPoint> sweep_epsilon_vs_q(const EpsSweepConfig& config);

/// Monte Carlo BER campaign. Per grid point: the proposed scheme constructs
/// the code for the plain AWGN channel at the design SNR; the mixture
/// baseline constructs it for the erasure-mixture channel at the same SNR
/// with eps = eps(Q). Both transmit with the same truncated-inversion policy.
/// on_point, when set, fires once per completed grid point.
std::vector<BerPoint> run_ber_campaign(const CampaignConfig& config,
                                       const std::function<void(const BerPoint&)>& on_point = {});

/// Rate-optimal design power per operating power Q.
std::vector<RatePoint> sweep_optimal_rate(const RateSweepConfig& config,
                                          const std::function<void(const RatePoint&)>& on_point = {});

/// 95% binomial confidence halfwidth (normal approximation).
double binomial_ci95_halfwidth(long long errors, long long total);

}  // namespace polarfade
