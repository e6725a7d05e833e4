#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "polarfade/construction.hpp"

using namespace polarfade;

namespace {

long double sum_ld(const std::vector<double>& v) {
  long double s = 0.0L;
  for (double x : v) s += x;
  return s;
}

double unpolarized_fraction(const std::vector<double>& z) {
  std::size_t mid = 0;
  for (double x : z) {
    if (x > 1e-6 && x < 1.0 - 1e-6) ++mid;
  }
  return static_cast<double>(mid) / static_cast<double>(z.size());
}

}  // namespace

TEST_CASE("initial_z_awgn values") {
  CHECK(initial_z_awgn(0.0) == doctest::Approx(1.0));
  CHECK(initial_z_awgn(1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-12));
  CHECK(initial_z_awgn(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(initial_z_awgn(-0.1), std::invalid_argument);
}

TEST_CASE("initial_z_mixture values") {
  CHECK(initial_z_mixture(1.3, 0.0) == doctest::Approx(initial_z_awgn(1.3)).epsilon(1e-15));
  CHECK(initial_z_mixture(1.3, 1.0) == doctest::Approx(1.0));
  CHECK(initial_z_mixture(1.0, 0.5) == doctest::Approx(0.6839397205857212).epsilon(1e-12));
  CHECK_THROWS_AS(initial_z_mixture(1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(initial_z_mixture(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("evolve_z single split: check channel first, variable channel second") {
  const auto z = evolve_z(0.5, 1);
  REQUIRE(z.size() == 2);
  CHECK(z[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("evolve_z two splits, hand recursion") {
  const auto z = evolve_z(0.5, 2);
  REQUIRE(z.size() == 4);
  CHECK(z[0] == doctest::Approx(0.9375).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(z[2] == doctest::Approx(0.4375).epsilon(1e-15));
  CHECK(z[3] == doctest::Approx(0.0625).epsilon(1e-15));
}

TEST_CASE("evolve_z conserves the sum and stays in range") {
  for (double z0 : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    for (int n : {1, 4, 8, 12}) {
      const auto z = evolve_z(z0, n);
      REQUIRE(z.size() == (std::size_t{1} << n));
      const long double target = std::pow(2.0L, n) * static_cast<long double>(z0);
      CHECK(std::abs(static_cast<double>(sum_ld(z) / target - 1.0L)) < 1e-12);
      for (double x : z) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
      }
    }
  }
  CHECK_THROWS_AS(evolve_z(-0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(evolve_z(1.1, 2), std::invalid_argument);
}

TEST_CASE("polarization strengthens between n=6 and n=12") {
  for (double z0 : {0.3, 0.5, 0.7}) {
    CHECK(unpolarized_fraction(evolve_z(z0, 12)) < unpolarized_fraction(evolve_z(z0, 6)));
  }
}

TEST_CASE("evolve_z is monotone in z0, entrywise") {
  const int n = 8;
  for (double z0 : {0.1, 0.3, 0.5, 0.7}) {
    const auto lo = evolve_z(z0, n);
    const auto hi = evolve_z(z0 + 0.2, n);
    for (std::size_t j = 0; j < lo.size(); ++j) CHECK(lo[j] <= hi[j]);
  }
}

TEST_CASE("select_info_set picks the smallest entries with index ties") {
  CHECK(select_info_set({0.0625, 0.4375, 0.5625, 0.9375}, 2) == std::vector<int>{0, 1});
  CHECK(select_info_set({0.5, 0.5, 0.1, 0.5}, 2) == std::vector<int>{0, 2});
  CHECK(select_info_set({0.3, 0.2, 0.1}, 0).empty());
  CHECK(select_info_set({0.3, 0.2, 0.1}, 3) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(select_info_set({0.5}, 2), std::invalid_argument);
}

TEST_CASE("N=2 construction always puts the data on the second channel") {
  for (double snr : {0.01, 0.5, 1.0, 4.0, 20.0}) {
    const PolarCode code = construct(2, 1, snr);
    CHECK(code.info_set() == std::vector<int>{1});
  }
}

TEST_CASE("N=4 construction matches the hand recursion") {
  // z0 = e^-1; two splits give (0.8403.., 0.3605.., 0.2523.., 0.0183..),
  // so K=2 selects channels 3 and 4 (0-based 2 and 3).
  const PolarCode code = construct(4, 2, 1.0);
  CHECK(code.info_set() == std::vector<int>{2, 3});
}

TEST_CASE("construction is deterministic") {
  const PolarCode a = construct(256, 128, 1.1);
  const PolarCode b = construct(256, 128, 1.1);
  CHECK(a.info_set() == b.info_set());
  CHECK_THROWS_AS(construct(100, 50, 1.0), std::invalid_argument);
}
