#pragma once

#include <memory>
#include <string>

#include "polarfade/numerics.hpp"
#include "polarfade/rng.hpp"

namespace polarfade {

/// Distribution of the i.i.d. per-symbol channel gain H. Gains are real and
/// may be negative; the transmitter's sign handling absorbs the phase.
class FadingModel {
 public:
  virtual ~FadingModel() = default;

  virtual double sample(Rng& rng) const = 0;
  virtual double cdf(double h) const = 0;
  /// Density where one exists; identically 0 for atomic models.
  virtual double pdf(double h) const = 0;
  virtual bool has_density() const { return true; }
  virtual double quantile(double p) const;

  /// P(|H| < delta), the outage/erasure mass of a threshold-delta policy.
  virtual double outage_mass(double delta) const;

  /// E[H^-2 ; |H| >= delta]. The default integrates pdf(h)/h^2 over
  /// [delta, quantile(1-1e-12)] and the mirrored negative range; the
  /// integrand is bounded by 1/delta^2 there so plain adaptive quadrature
  /// suffices. At delta = 0 the expectation may diverge (it does whenever
  /// pdf(0) > 0, and also e.g. for Rayleigh); divergence is detected by the
  /// density-at-zero test plus a shrinking-cutoff growth check, and reported
  /// as +infinity.
  virtual double inverse_square_mass(double delta, const QuadratureSpec& quad = {}) const;

  /// Config-file spelling of this model, e.g. "gaussian:1".
  virtual std::string describe() const = 0;
};

/// H ~ N(0, sigma_h2).
class GaussianReal final : public FadingModel {
 public:
  explicit GaussianReal(double sigma_h2);
  double sample(Rng& rng) const override;
  double cdf(double h) const override;
  double pdf(double h) const override;
  double quantile(double p) const override;
  std::string describe() const override;
  double sigma_h2() const { return sigma_h2_; }

 private:
  double sigma_h2_;
  double sigma_h_;
};

/// |H| Rayleigh with the given scale; support is nonnegative.
class Rayleigh final : public FadingModel {
 public:
  explicit Rayleigh(double scale);
  double sample(Rng& rng) const override;
  double cdf(double h) const override;
  double pdf(double h) const override;
  double quantile(double p) const override;
  std::string describe() const override;
  double scale() const { return scale_; }

 private:
  double scale_;
};

/// Degenerate gain: H = h0 always. h0 = 0 models a channel that can never be
/// inverted (every slot erased for any positive threshold).
class PointMass final : public FadingModel {
 public:
  explicit PointMass(double h0);
  double sample(Rng& rng) const override;
  double cdf(double h) const override;
  double pdf(double h) const override;
  bool has_density() const override { return false; }
  double quantile(double p) const override;
  double outage_mass(double delta) const override;
  double inverse_square_mass(double delta, const QuadratureSpec& quad = {}) const override;
  std::string describe() const override;
  double h0() const { return h0_; }

 private:
  double h0_;
};

/// |H| uniform on [a, b] with a random sign, density 1/(2(b-a)) on each sign
/// region.
class UniformAbs final : public FadingModel {
 public:
  UniformAbs(double a, double b);
  double sample(Rng& rng) const override;
  double cdf(double h) const override;
  double pdf(double h) const override;
  double quantile(double p) const override;
  double inverse_square_mass(double delta, const QuadratureSpec& quad = {}) const override;
  std::string describe() const override;

 private:
  double a_;
  double b_;
};

enum class FadingKind { gaussian_real, rayleigh, point_mass, uniform_abs };

/// Serializable description of a fading model (config files, manifests).
struct FadingSpec {
  FadingKind kind = FadingKind::gaussian_real;
  double a = 1.0;  // sigma_h2 / scale / h0 / lower edge
  double b = 0.0;  // upper edge (uniform_abs only)
};

std::unique_ptr<FadingModel> make_fading(const FadingSpec& spec);
/// Parses "gaussian:1", "rayleigh:0.5", "pointmass:1", "uniform_abs:1,2".
FadingSpec parse_fading(const std::string& text);
std::string to_string(const FadingSpec& spec);

}  // namespace polarfade
