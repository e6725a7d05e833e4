#pragma once

#include "polarfade/fading.hpp"
#include "polarfade/numerics.hpp"

namespace polarfade {

/// Equal-prior BPSK output density: the mixture of N(+sqrt(P), sigma2) and
/// N(-sqrt(P), sigma2) with weight 1/2 each.
double output_density(double y, double p, double sigma2);

/// Differential entropy of the channel output, -integral f_Y log2 f_Y, in
/// bits. Exposed separately because the design-power optimizer can use it as
/// the literal maximization objective.
double bi_awgn_output_entropy(double p, double sigma2, const QuadratureSpec& quad = {});

/// Symmetric capacity of the binary-input AWGN channel in bits per use:
/// -integral f_Y log2 f_Y - (1/2) log2(2 pi e sigma2), clamped to [0,1].
double bi_awgn_capacity(double p, double sigma2, const QuadratureSpec& quad = {});

/// Inverts bi_awgn_capacity in P for a target rate in (0,1): capacity is
/// strictly increasing in P, so a doubling bracket plus bisection converges;
/// the result reproduces the rate to |dR| <= 1e-8.
double solve_design_power(double rate, double sigma2, const QuadratureSpec& quad = {});

/// Capacity of the AWGN-plus-erasure cascade: (1 - eps) * c_awgn.
double equivalent_capacity(double c_awgn, double eps);

struct DesignOptimum {
  double p_star;
  double r_star;
  double eps_star;
};

/// Throughput objective for the rate-optimal design search. The default
/// maximizes (1 - eps(P)) * R(P) with R from bi_awgn_capacity, which is the
/// equivalent-channel throughput; `output_entropy` instead maximizes
/// (1 - eps(P)) * (-integral f_Y log2 f_Y), dropping the additive noise
/// entropy term. The two differ because eps depends on P.
enum class DesignObjective { throughput, output_entropy };

/// Maximizes the design objective over P in (0, qpeak], where eps(P) follows
/// from the truncated-inversion policy for average budget q and peak budget
/// qpeak. 1-D search: log-spaced bracket scan plus golden-section refinement
/// to 1e-6 relative in P. r_star is always the capacity at p_star.
/// Throws InfeasibleError when no P yields a positive objective.
DesignOptimum optimize_design_power(double q, double qpeak, double sigma2,
                                    const FadingModel& fading, const QuadratureSpec& quad = {},
                                    DesignObjective objective = DesignObjective::throughput);

}  // namespace polarfade
