#include "polarfade/construction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polarfade {

double initial_z_awgn(double snr) {
  if (snr < 0.0) throw std::invalid_argument("initial_z_awgn: snr must be nonnegative");
  return std::exp(-snr);
}

double initial_z_mixture(double snr, double eps) {
  if (snr < 0.0) throw std::invalid_argument("initial_z_mixture: snr must be nonnegative");
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("initial_z_mixture: eps must lie in [0,1]");
  return eps + (1.0 - eps) * std::exp(-snr);
}

std::vector<double> evolve_z(double z0, int n) {
  if (!(z0 >= 0.0 && z0 <= 1.0)) throw std::invalid_argument("evolve_z: z0 must lie in [0,1]");
  if (n < 0 || n > 26) throw std::invalid_argument("evolve_z: n out of range");
  std::vector<double> z{z0};
  std::vector<double> next;
  for (int level = 0; level < n; ++level) {
    next.resize(z.size() * 2);
    for (std::size_t j = 0; j < z.size(); ++j) {
      const double sq = z[j] * z[j];
      next[2 * j] = 2.0 * z[j] - sq;
      next[2 * j + 1] = sq;
    }
    z.swap(next);
  }
  return z;
}

std::vector<int> select_info_set(const std::vector<double>& z, int k) {
  const int N = static_cast<int>(z.size());
  if (k < 0 || k > N) {
    throw std::invalid_argument("select_info_set: k must lie in [0, " + std::to_string(N) + "]");
  }
  std::vector<int> order(z.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&z](int a, int b) {
    if (z[static_cast<std::size_t>(a)] != z[static_cast<std::size_t>(b)]) {
      return z[static_cast<std::size_t>(a)] < z[static_cast<std::size_t>(b)];
    }
    return a < b;
  });
  order.resize(static_cast<std::size_t>(k));
  std::sort(order.begin(), order.end());
  return order;
}

PolarCode construct(int block_length, int k, double design_snr, double eps) {
  if (block_length < 1 || !is_power_of_two(static_cast<std::size_t>(block_length))) {
    throw std::invalid_argument("construct: block length must be a power of two");
  }
  const int n = std::countr_zero(static_cast<unsigned>(block_length));
  const double z0 = initial_z_mixture(design_snr, eps);
  const std::vector<double> z = evolve_z(z0, n);
  return PolarCode(n, select_info_set(z, k), design_snr, eps);
}

}  // namespace polarfade
