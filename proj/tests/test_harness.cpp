#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "polarfade/harness.hpp"
#include "polarfade/rng.hpp"

using namespace polarfade;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CampaignConfig small_campaign() {
  CampaignConfig config;
  config.n = 6;
  config.rate = 0.5;
  config.sigma2 = 1.0;
  config.q_grid = {2.0};
  config.fading = FadingSpec{FadingKind::gaussian_real, 1.0};
  config.schemes = {Scheme::proposed};
  config.master_seed = 42;
  config.max_trials = 1000;
  config.target_bit_errors = 1000000;  // no early stop
  config.batch_size = 128;
  config.threads = 1;
  return config;
}

}  // namespace

TEST_CASE("epsilon sweep is nonincreasing in Q for every fading variance") {
  EpsSweepConfig config;
  config.rate = 0.5;
  config.q_grid = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  config.sigma_h2_grid = {0.5, 1.0, 2.0};
  const auto rows = sweep_epsilon_vs_q(config);
  REQUIRE(rows.size() == 18);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i % 6 != 0) {
      CHECK(rows[i].epsilon <= rows[i - 1].epsilon);
      CHECK(rows[i].sigma_h2 == rows[i - 1].sigma_h2);
    }
    CHECK(rows[i].p_design == doctest::Approx(rows[0].p_design));
    CHECK(rows[i].epsilon >= 0.0);
    CHECK(rows[i].epsilon <= 1.0);
  }
}

TEST_CASE("with no peak constraint, epsilon vanishes as Q grows") {
  EpsSweepConfig config;
  config.q_grid = {1.0, 1000.0};
  config.sigma_h2_grid = {1.0};
  const auto rows = sweep_epsilon_vs_q(config);
  CHECK(rows[1].epsilon < 0.01);
  CHECK(rows[1].epsilon < rows[0].epsilon);
}

TEST_CASE("a finite peak constraint floors epsilon at large Q") {
  EpsSweepConfig config;
  config.q_grid = {10000.0};
  config.sigma_h2_grid = {1.0};
  config.qpeak = 4.0;
  const auto rows = sweep_epsilon_vs_q(config);
  const GaussianReal fading(1.0);
  const double delta_peak = std::sqrt(rows[0].p_design / config.qpeak);
  CHECK(rows[0].delta == doctest::Approx(delta_peak).epsilon(1e-9));
  CHECK(rows[0].epsilon == doctest::Approx(erasure_prob(delta_peak, fading)).epsilon(1e-9));
  CHECK_THROWS_AS(sweep_epsilon_vs_q(EpsSweepConfig{}), std::invalid_argument);
}

TEST_CASE("campaigns reproduce bit-for-bit and are thread-count invariant") {
  CampaignConfig config = small_campaign();
  config.max_trials = 200;
  const auto a = run_ber_campaign(config);
  const auto b = run_ber_campaign(config);
  config.threads = 3;
  const auto c = run_ber_campaign(config);
  REQUIRE(a.size() == 1);
  CHECK(a[0].bit_errors == b[0].bit_errors);
  CHECK(a[0].block_errors == b[0].block_errors);
  CHECK(a[0].trials == b[0].trials);
  CHECK(a[0].bit_errors == c[0].bit_errors);
  CHECK(a[0].block_errors == c[0].block_errors);
  CHECK(a[0].trials == c[0].trials);
}

TEST_CASE("a different master seed changes the sampled universe") {
  CampaignConfig config = small_campaign();
  config.max_trials = 200;
  const auto a = run_ber_campaign(config);
  config.master_seed = 43;
  const auto b = run_ber_campaign(config);
  CHECK(a[0].bit_errors != b[0].bit_errors);
}

TEST_CASE("early stopping is evaluated at fixed batch boundaries") {
  CampaignConfig config = small_campaign();
  config.target_bit_errors = 1;  // stops at the first batch regardless of threads
  config.threads = 1;
  const auto a = run_ber_campaign(config);
  config.threads = 4;
  const auto b = run_ber_campaign(config);
  REQUIRE(a.size() == 1);
  CHECK(a[0].trials == 128);
  CHECK(b[0].trials == 128);
  CHECK(a[0].bit_errors == b[0].bit_errors);
}

TEST_CASE("ber accounting matches the raw counts") {
  CampaignConfig config = small_campaign();
  config.max_trials = 256;
  const auto rows = run_ber_campaign(config);
  const auto& r = rows[0];
  CHECK(r.block_length == 64);
  CHECK(r.dimension == 32);
  CHECK(r.ber == doctest::Approx(static_cast<double>(r.bit_errors) / (r.trials * r.dimension)));
  CHECK(r.bler == doctest::Approx(static_cast<double>(r.block_errors) / r.trials));
  CHECK(r.ci95_halfwidth ==
        doctest::Approx(binomial_ci95_halfwidth(r.bit_errors, r.trials * r.dimension)));
  CHECK(r.bler >= r.ber);
}

TEST_CASE("95% binomial CI covers a rigged flip probability in >= 90 of 100 replicas") {
  const double p = 0.02;
  const long long bits_per_campaign = 5000;
  int covered = 0;
  Rng rng(321);
  for (int rep = 0; rep < 100; ++rep) {
    long long errors = 0;
    for (long long i = 0; i < bits_per_campaign; ++i) errors += uniform01(rng) < p;
    const double ber = static_cast<double>(errors) / bits_per_campaign;
    const double ci = binomial_ci95_halfwidth(errors, bits_per_campaign);
    covered += std::abs(ber - p) <= ci;
  }
  CHECK(covered >= 90);
}

TEST_CASE("mixture-design baseline runs alongside the proposed scheme") {
  CampaignConfig config = small_campaign();
  config.max_trials = 128;
  config.q_grid = {1.0, 2.0};
  config.schemes = {Scheme::proposed, Scheme::mixture_design};
  const auto rows = run_ber_campaign(config);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].scheme == Scheme::proposed);
  CHECK(rows[1].scheme == Scheme::mixture_design);
  CHECK(rows[0].q == doctest::Approx(1.0));
  CHECK(rows[2].q == doctest::Approx(2.0));
}

TEST_CASE("optimal-rate sweep is nondecreasing and locally optimal") {
  RateSweepConfig config;
  config.q_grid = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  config.fading = FadingSpec{FadingKind::gaussian_real, 1.0};
  const auto rows = sweep_optimal_rate(config);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].r_star >= rows[i - 1].r_star - 1e-9);
  }
  for (const auto& r : rows) {
    CHECK(r.r_star > 0.0);
    CHECK(r.r_star < 1.0);
    CHECK(r.eps_star > 0.0);
    CHECK(r.eps_star < 1.0);
  }
}

TEST_CASE("scheme names round-trip") {
  CHECK(to_string(Scheme::proposed) == "proposed");
  CHECK(to_string(Scheme::mixture_design) == "mixture_design");
  CHECK(parse_scheme("proposed") == Scheme::proposed);
  CHECK(parse_scheme("mixture_design") == Scheme::mixture_design);
  CHECK_THROWS_AS(parse_scheme("other"), std::invalid_argument);
}
