#include "polarfade/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "polarfade/construction.hpp"
#include "polarfade/power_control.hpp"

namespace polarfade {

std::string to_string(Scheme scheme) {
  return scheme == Scheme::proposed ? "proposed" : "mixture_design";
}

Scheme parse_scheme(const std::string& text) {
  if (text == "proposed") return Scheme::proposed;
  if (text == "mixture_design") return Scheme::mixture_design;
  throw std::invalid_argument("unknown scheme '" + text + "'");
}

double binomial_ci95_halfwidth(long long errors, long long total) {
  if (total <= 0) return 0.0;
  const double p = static_cast<double>(errors) / static_cast<double>(total);
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(total));
}

namespace {

void check_q_grid(const std::vector<double>& grid, const char* who) {
  if (grid.empty()) throw std::invalid_argument(std::string(who) + ": empty Q grid");
  if (std::adjacent_find(grid.begin(), grid.end(),
                         [](double a, double b) { return a >= b; }) != grid.end()) {
    throw std::invalid_argument(std::string(who) + ": Q grid must be strictly increasing");
  }
}

}  // namespace

std::vector<EpsPoint> sweep_epsilon_vs_q(const EpsSweepConfig& config) {
  check_q_grid(config.q_grid, "sweep_epsilon_vs_q");
  const double p_design = solve_design_power(config.rate, config.sigma2, config.quad);
  std::vector<EpsPoint> out;
  out.reserve(config.q_grid.size() * config.sigma_h2_grid.size());
  for (double sigma_h2 : config.sigma_h2_grid) {
    const GaussianReal fading(sigma_h2);
    for (double q : config.q_grid) {
      const PowerBudget budget{p_design, q, config.qpeak, config.sigma2};
      const InversionPolicy policy = make_policy(budget, fading, config.quad);
      out.push_back(EpsPoint{q, sigma_h2, p_design, policy.delta,
                             erasure_prob(policy.delta, fading)});
    }
  }
  return out;
}

namespace {

struct TrialCounts {
  long long bit_errors = 0;
  int block_error = 0;
};

// Trials [begin, end) of one grid point, strided across workers. Counts land
// in per-trial slots; the caller reduces them in index order.
void run_trial_range(const PolarCode& code, const PowerBudget& budget, const FadingModel& fading,
                     const InversionPolicy& policy, std::uint64_t master_seed,
                     std::uint64_t point_key, long long begin, long long end, int worker,
                     int stride, std::vector<TrialCounts>& slots) {
  const int K = code.dimension();
  BitVector message(static_cast<std::size_t>(K));
  for (long long t = begin + worker; t < end; t += stride) {
    Rng rng = make_stream(master_seed, point_key, static_cast<std::uint64_t>(t));
    for (int j = 0; j < K; ++j) message[static_cast<std::size_t>(j)] = rng() & 1u;
    const BlockResult res = simulate_block(code, message, budget, fading, policy, rng);
    TrialCounts& c = slots[static_cast<std::size_t>(t - begin)];
    for (int j = 0; j < K; ++j) {
      c.bit_errors += res.decoded[static_cast<std::size_t>(j)] != message[static_cast<std::size_t>(j)];
    }
    c.block_error = c.bit_errors > 0;
  }
}

}  // namespace

std::vector<BerPoint> run_ber_campaign(const CampaignConfig& config,
                                       const std::function<void(const BerPoint&)>& on_point) {
  check_q_grid(config.q_grid, "run_ber_campaign");
  if (config.schemes.empty()) throw std::invalid_argument("run_ber_campaign: no schemes requested");
  if (config.max_trials < 1) throw std::invalid_argument("run_ber_campaign: max_trials must be >= 1");
  if (config.batch_size < 1) throw std::invalid_argument("run_ber_campaign: batch_size must be >= 1");
  const int N = 1 << config.n;
  const int K = config.k > 0 ? config.k : static_cast<int>(std::llround(config.rate * N));
  if (K < 1 || K > N) throw std::invalid_argument("run_ber_campaign: dimension out of range");
  const double code_rate = static_cast<double>(K) / N;
  const double p_design = config.design_power > 0.0
                              ? config.design_power
                              : solve_design_power(code_rate, config.sigma2, config.quad);
  const auto fading = make_fading(config.fading);
  int workers = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(workers, 1);

  std::vector<BerPoint> out;
  for (std::size_t qi = 0; qi < config.q_grid.size(); ++qi) {
    const double q = config.q_grid[qi];
    const PowerBudget budget{p_design, q, config.qpeak, config.sigma2};
    const InversionPolicy policy = make_policy(budget, *fading, config.quad);
    const double eps = erasure_prob(policy.delta, *fading);
    for (std::size_t si = 0; si < config.schemes.size(); ++si) {
      const Scheme scheme = config.schemes[si];
      const double design_snr = p_design / config.sigma2;
      const PolarCode code = scheme == Scheme::proposed
                                 ? construct(N, K, design_snr, 0.0)
                                 : construct(N, K, design_snr, eps);
      const std::uint64_t point_key =
          (static_cast<std::uint64_t>(qi) << 8) | static_cast<std::uint64_t>(si);

      long long trials = 0;
      long long bit_errors = 0;
      long long block_errors = 0;
      std::vector<TrialCounts> slots;
      while (trials < config.max_trials && bit_errors < config.target_bit_errors) {
        const long long begin = trials;
        const long long end = std::min<long long>(config.max_trials, begin + config.batch_size);
        slots.assign(static_cast<std::size_t>(end - begin), TrialCounts{});
        const int used = static_cast<int>(
            std::min<long long>(workers, end - begin));
        if (used <= 1) {
          run_trial_range(code, budget, *fading, policy, config.master_seed, point_key, begin, end,
                          0, 1, slots);
        } else {
          std::vector<std::thread> pool;
          pool.reserve(static_cast<std::size_t>(used));
          for (int w = 0; w < used; ++w) {
            pool.emplace_back(run_trial_range, std::cref(code), std::cref(budget),
                              std::cref(*fading), std::cref(policy), config.master_seed, point_key,
                              begin, end, w, used, std::ref(slots));
          }
          for (auto& th : pool) th.join();
        }
        for (const TrialCounts& c : slots) {
          bit_errors += c.bit_errors;
          block_errors += c.block_error;
        }
        trials = end;
      }

      const long long total_bits = trials * K;
      BerPoint point{};
      point.q = q;
      point.scheme = scheme;
      point.block_length = N;
      point.dimension = K;
      point.trials = trials;
      point.bit_errors = bit_errors;
      point.block_errors = block_errors;
      point.ber = total_bits > 0 ? static_cast<double>(bit_errors) / total_bits : 0.0;
      point.bler = trials > 0 ? static_cast<double>(block_errors) / trials : 0.0;
      point.ci95_halfwidth = binomial_ci95_halfwidth(bit_errors, total_bits);
      if (on_point) on_point(point);
      out.push_back(point);
    }
  }
  return out;
}

std::vector<RatePoint> sweep_optimal_rate(const RateSweepConfig& config,
                                          const std::function<void(const RatePoint&)>& on_point) {
  check_q_grid(config.q_grid, "sweep_optimal_rate");
  const auto fading = make_fading(config.fading);
  std::vector<RatePoint> out;
  out.reserve(config.q_grid.size());
  for (double q : config.q_grid) {
    const DesignOptimum opt =
        optimize_design_power(q, config.qpeak, config.sigma2, *fading, config.quad,
                              config.objective);
    RatePoint point{q, opt.p_star, opt.r_star, opt.eps_star};
    if (on_point) on_point(point);
    out.push_back(point);
  }
  return out;
}

}  // namespace polarfade
