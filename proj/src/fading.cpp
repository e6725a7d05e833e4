#include "polarfade/fading.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace polarfade {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

double FadingModel::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile: p must lie in (0,1)");
  double lo = -1.0, hi = 1.0;
  int guard = 0;
  while (cdf(lo) > p && ++guard < 2100) lo *= 2.0;
  guard = 0;
  while (cdf(hi) < p && ++guard < 2100) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) >= p ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double FadingModel::outage_mass(double delta) const {
  if (delta < 0.0) throw std::invalid_argument("outage_mass: delta must be nonnegative");
  if (delta == 0.0) return 0.0;
  return cdf(delta) - cdf(-delta);
}

double FadingModel::inverse_square_mass(double delta, const QuadratureSpec& quad) const {
  if (delta < 0.0) throw std::invalid_argument("inverse_square_mass: delta must be nonnegative");
  auto direct = [this](double h) { return pdf(h) / (h * h); };
  // Near the origin the 1/h^2 weight dwarfs an absolute tolerance, so the
  // |h| <= 1 portion is evaluated through the substitution t = 1/h, which
  // turns pdf(h)/h^2 dh into the bounded integrand pdf(1/t) dt.
  auto substituted = [this](double t) { return pdf(1.0 / t); };
  // Integral of pdf/h^2 over [a, b] on one side of the origin.
  auto segment = [&](double a, double b) {
    double s = 0.0;
    if (a > 0.0) {
      const double m = std::clamp(1.0, a, b);
      if (a < m) s += integrate(substituted, 1.0 / m, 1.0 / a, quad);
      if (m < b) s += integrate(direct, m, b, quad);
    } else {
      const double m = std::clamp(-1.0, a, b);
      if (m < b) s += integrate(substituted, 1.0 / b, 1.0 / m, quad);
      if (a < m) s += integrate(direct, a, m, quad);
    }
    return s;
  };
  const double hi = quantile(1.0 - 1e-12);
  const double lo = quantile(1e-12);
  // Mass of pdf/h^2 over the annulus cut_lo <= |h| <= cut_hi (within support).
  auto both_sides = [&](double cut_lo, double cut_hi) {
    double s = 0.0;
    const double pos_hi = std::min(cut_hi, hi);
    if (cut_lo < pos_hi) s += segment(cut_lo, pos_hi);
    const double neg_lo = std::max(lo, -cut_hi);
    if (neg_lo < -cut_lo) s += segment(neg_lo, -cut_lo);
    return s;
  };
  if (delta > 0.0) {
    double s = 0.0;
    if (delta < hi) s += segment(delta, hi);
    if (lo < -delta) s += segment(lo, -delta);
    return s;
  }

  if (pdf(0.0) > 0.0) return kInf;
  // Growth check: shrink the cutoff geometrically; a convergent expectation
  // shows vanishing increments, a (log-)divergent one does not.
  double cut = 1e-2;
  double total = both_sides(cut, std::max(std::abs(hi), std::abs(lo)));
  for (int k = 0; k < 18; ++k) {
    const double next_cut = 0.25 * cut;
    const double inc = both_sides(next_cut, cut);
    total += inc;
    cut = next_cut;
    if (inc <= std::max(100.0 * quad.abs_tol, 1e-9 * total)) return total;
  }
  return kInf;
}

// ---- GaussianReal ----

GaussianReal::GaussianReal(double sigma_h2) : sigma_h2_(sigma_h2), sigma_h_(std::sqrt(sigma_h2)) {
  if (!(sigma_h2 > 0.0)) throw std::invalid_argument("GaussianReal: variance must be positive");
}

double GaussianReal::sample(Rng& rng) const { return sigma_h_ * normal_sample(rng); }

double GaussianReal::cdf(double h) const { return normal_cdf(h / sigma_h_); }

double GaussianReal::pdf(double h) const { return normal_pdf(h, 0.0, sigma_h2_); }

double GaussianReal::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile: p must lie in (0,1)");
  double lo = -42.0, hi = 42.0;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) >= p ? hi : lo) = mid;
  }
  return sigma_h_ * 0.5 * (lo + hi);
}

std::string GaussianReal::describe() const { return "gaussian:" + fmt_param(sigma_h2_); }

// ---- Rayleigh ----

Rayleigh::Rayleigh(double scale) : scale_(scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("Rayleigh: scale must be positive");
}

double Rayleigh::sample(Rng& rng) const {
  const double u = uniform01(rng);
  return scale_ * std::sqrt(-2.0 * std::log1p(-u));
}

double Rayleigh::cdf(double h) const {
  if (h <= 0.0) return 0.0;
  return -std::expm1(-0.5 * h * h / (scale_ * scale_));
}

double Rayleigh::pdf(double h) const {
  if (h <= 0.0) return 0.0;
  const double s2 = scale_ * scale_;
  return h / s2 * std::exp(-0.5 * h * h / s2);
}

double Rayleigh::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile: p must lie in (0,1)");
  return scale_ * std::sqrt(-2.0 * std::log1p(-p));
}

std::string Rayleigh::describe() const { return "rayleigh:" + fmt_param(scale_); }

// ---- PointMass ----

PointMass::PointMass(double h0) : h0_(h0) {}

double PointMass::sample(Rng&) const { return h0_; }

double PointMass::cdf(double h) const { return h >= h0_ ? 1.0 : 0.0; }

double PointMass::pdf(double) const { return 0.0; }

double PointMass::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile: p must lie in (0,1)");
  return h0_;
}

double PointMass::outage_mass(double delta) const {
  if (delta < 0.0) throw std::invalid_argument("outage_mass: delta must be nonnegative");
  return std::abs(h0_) < delta ? 1.0 : 0.0;
}

double PointMass::inverse_square_mass(double delta, const QuadratureSpec&) const {
  if (delta < 0.0) throw std::invalid_argument("inverse_square_mass: delta must be nonnegative");
  if (std::abs(h0_) < delta) return 0.0;
  if (h0_ == 0.0) return kInf;
  return 1.0 / (h0_ * h0_);
}

std::string PointMass::describe() const { return "pointmass:" + fmt_param(h0_); }

// ---- UniformAbs ----

UniformAbs::UniformAbs(double a, double b) : a_(a), b_(b) {
  if (!(a >= 0.0) || !(b > a)) throw std::invalid_argument("UniformAbs: need 0 <= a < b");
}

double UniformAbs::sample(Rng& rng) const {
  const double v = 2.0 * uniform01(rng) - 1.0;  // [-1, 1)
  const double mag = a_ + (b_ - a_) * std::abs(v);
  return v < 0.0 ? -mag : mag;
}

double UniformAbs::cdf(double h) const {
  if (h <= -b_) return 0.0;
  if (h < -a_) return 0.5 * (h + b_) / (b_ - a_);
  if (h < a_) return 0.5;
  if (h < b_) return 0.5 + 0.5 * (h - a_) / (b_ - a_);
  return 1.0;
}

double UniformAbs::pdf(double h) const {
  const double m = std::abs(h);
  if (m >= a_ && m <= b_) return 0.5 / (b_ - a_);
  return 0.0;
}

double UniformAbs::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile: p must lie in (0,1)");
  if (p < 0.5) return -b_ + 2.0 * p * (b_ - a_);
  return a_ + 2.0 * (p - 0.5) * (b_ - a_);
}

double UniformAbs::inverse_square_mass(double delta, const QuadratureSpec&) const {
  if (delta < 0.0) throw std::invalid_argument("inverse_square_mass: delta must be nonnegative");
  const double lo = std::max(delta, a_);
  if (lo >= b_) return 0.0;
  if (lo == 0.0) return kInf;
  return (1.0 / lo - 1.0 / b_) / (b_ - a_);
}

std::string UniformAbs::describe() const {
  return "uniform_abs:" + fmt_param(a_) + "," + fmt_param(b_);
}

// ---- spec / factory ----

std::unique_ptr<FadingModel> make_fading(const FadingSpec& spec) {
  switch (spec.kind) {
    case FadingKind::gaussian_real:
      return std::make_unique<GaussianReal>(spec.a);
    case FadingKind::rayleigh:
      return std::make_unique<Rayleigh>(spec.a);
    case FadingKind::point_mass:
      return std::make_unique<PointMass>(spec.a);
    case FadingKind::uniform_abs:
      return std::make_unique<UniformAbs>(spec.a, spec.b);
  }
  throw std::invalid_argument("make_fading: unknown kind");
}

FadingSpec parse_fading(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("fading spec must look like kind:params, got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const std::string params = text.substr(colon + 1);
  FadingSpec spec;
  try {
    const auto comma = params.find(',');
    if (comma == std::string::npos) {
      spec.a = std::stod(params);
    } else {
      spec.a = std::stod(params.substr(0, comma));
      spec.b = std::stod(params.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("fading spec has non-numeric parameters: '" + text + "'");
  }
  if (kind == "gaussian") {
    spec.kind = FadingKind::gaussian_real;
  } else if (kind == "rayleigh") {
    spec.kind = FadingKind::rayleigh;
  } else if (kind == "pointmass") {
    spec.kind = FadingKind::point_mass;
  } else if (kind == "uniform_abs") {
    spec.kind = FadingKind::uniform_abs;
  } else {
    throw std::invalid_argument("unknown fading kind '" + kind + "'");
  }
  make_fading(spec);  // validate parameters now
  return spec;
}

std::string to_string(const FadingSpec& spec) { return make_fading(spec)->describe(); }

}  // namespace polarfade
