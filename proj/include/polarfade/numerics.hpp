#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polarfade/errors.hpp"

namespace polarfade {

/// Controls for the adaptive quadrature used throughout the capacity and
/// power-control solvers. The integration window for capacity integrals is
/// [-(sqrt(P) + range_sigmas*sigma), +(sqrt(P) + range_sigmas*sigma)]; ten
/// noise deviations past the constellation point put the truncated tail
/// below 1e-20.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  int max_subdivisions = 1 << 16;
  double range_sigmas = 10.0;
};

namespace detail {

template <typename F>
double adaptive_simpson_rec(F& f, double a, double m, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth, int& budget) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
    return left + right + delta / 15.0;  // Richardson correction
  }
  if (--budget <= 0) {
    throw NumericError("quadrature did not converge within max_subdivisions; residual error estimate " +
                       std::to_string(std::abs(delta) / 15.0) + " on [" + std::to_string(a) + ", " +
                       std::to_string(b) + "]");
  }
  return adaptive_simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget) +
         adaptive_simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance
/// spec.abs_tol. Throws NumericError when spec.max_subdivisions is exhausted.
template <typename F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  int budget = spec.max_subdivisions;
  return detail::adaptive_simpson_rec(f, a, m, b, fa, fm, fb, whole, spec.abs_tol, 60, budget);
}

/// Smallest x in [lo, hi] (to absolute tolerance xtol) with pred(x) true,
/// given pred(lo) false, pred(hi) true and pred monotone. Returns the
/// true-side endpoint of the final bracket.
template <typename Pred>
double bisect_transition(Pred&& pred, double lo, double hi, double xtol, int max_iter = 200) {
  for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// Golden-section minimizer on [a, b]; stops when the bracket shrinks to
/// rel_tol relative to the midpoint. Assumes f is unimodal on the bracket.
template <typename F>
double golden_section_min(F&& f, double a, double b, double rel_tol, int max_iter = 400) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b)) * 0.5; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

inline double normal_pdf(double x, double mean, double var) {
  const double d = x - mean;
  return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * std::numbers::pi * var);
}

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace polarfade
