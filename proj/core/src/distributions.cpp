#include "clhs/distributions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "clhs/errors.hpp"

namespace clhs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Rational approximation of the normal quantile (P. J. Acklam), relative
// error below 1.15e-9 before refinement.
double acklam_quantile(double p) {
  constexpr std::array<double, 6> a = {-3.969683028665376e+01, 2.209460984245205e+02,
                                       -2.759285104469687e+02, 1.383577518672690e+02,
                                       -3.066479806614716e+01, 2.506628277459239e+00};
  constexpr std::array<double, 5> b = {-5.447609879822406e+01, 1.615858368580409e+02,
                                       -1.556989798598866e+02, 6.680131188771972e+01,
                                       -1.328068155288572e+01};
  constexpr std::array<double, 6> c = {-7.784894002430293e-03, -3.223964580411365e-01,
                                       -2.400758277161838e+00, -2.549732539343734e+00,
                                       4.374664141464968e+00,  2.938163982698783e+00};
  constexpr std::array<double, 4> d = {7.784695709041462e-03, 3.224671290700398e-01,
                                       2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Lower half only (p <= 0.5): Phi(x) is accurate there through erfc.
double lower_half_quantile(double p) {
  const double x = acklam_quantile(p);
  const double e = standard_normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  const double refined = x - u / (1.0 + 0.5 * x * u);
  // exp() overflows for p near the subnormal range; keep the raw estimate there
  return std::isfinite(refined) ? refined : x;
}

// Smallest/largest double strictly inside (0,1).
double clamp_probability(double p) {
  if (p <= 0.0) return std::numeric_limits<double>::denorm_min();
  if (p >= 1.0) return std::nextafter(1.0, 0.0);
  return p;
}

std::string describe(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::uniform:
      return "uniform";
    case DistributionKind::normal:
      return "normal";
    case DistributionKind::truncated_normal:
      return "truncnorm";
  }
  return "unknown";
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double standard_normal_survival(double z) {
  return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

double standard_normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("normal quantile requires u in (0,1), got " + describe(u));
  }
  if (u == 0.5) return 0.0;
  // 1 - u is exact for u >= 0.5
  return u < 0.5 ? lower_half_quantile(u) : -lower_half_quantile(1.0 - u);
}

Distribution::Distribution(DistributionKind kind, double mean, double sd, double lower,
                           double upper, std::string name)
    : kind_(kind), mean_(mean), sd_(sd), lower_(lower), upper_(upper), name_(std::move(name)) {}

Distribution Distribution::uniform(double lower, double upper, std::string name) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    throw DomainError("uniform requires finite bounds with min < max, got [" +
                      describe(lower) + ", " + describe(upper) + "]");
  }
  return Distribution(DistributionKind::uniform, 0.5 * (lower + upper), 0.0, lower, upper,
                      std::move(name));
}

Distribution Distribution::normal(double mean, double sd, std::string name) {
  if (!std::isfinite(mean) || !std::isfinite(sd) || !(sd > 0.0)) {
    throw DomainError("normal requires finite mean and sd > 0, got mean=" + describe(mean) +
                      " sd=" + describe(sd));
  }
  return Distribution(DistributionKind::normal, mean, sd, -kInf, kInf, std::move(name));
}

Distribution Distribution::truncated_normal(double mean, double sd, double lower, double upper,
                                            std::string name) {
  if (!std::isfinite(mean) || !std::isfinite(sd) || !(sd > 0.0)) {
    throw DomainError("truncnorm requires finite mean and sd > 0, got mean=" +
                      describe(mean) + " sd=" + describe(sd));
  }
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    throw DomainError("truncnorm requires finite bounds with min < max, got [" +
                      describe(lower) + ", " + describe(upper) + "]");
  }
  Distribution d(DistributionKind::truncated_normal, mean, sd, lower, upper, std::move(name));
  d.alpha_ = (lower - mean) / sd;
  d.beta_ = (upper - mean) / sd;
  // Right-tail truncations are evaluated on survival values to keep precision.
  d.upper_tail_ = d.alpha_ > 0.0;
  if (d.upper_tail_) {
    d.mass_lo_ = standard_normal_survival(d.alpha_);
    d.mass_hi_ = standard_normal_survival(d.beta_);
  } else {
    d.mass_lo_ = standard_normal_cdf(d.alpha_);
    d.mass_hi_ = standard_normal_cdf(d.beta_);
  }
  if (!(std::abs(d.mass_lo_ - d.mass_hi_) > 0.0)) {
    throw DomainError("truncnorm interval carries no probability mass in double precision");
  }
  return d;
}

Distribution Distribution::with_name(std::string name) const {
  Distribution copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

double Distribution::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile requires u in (0,1), got " + describe(u));
  }
  double x = 0.0;
  switch (kind_) {
    case DistributionKind::uniform:
      x = lower_ + (upper_ - lower_) * u;
      break;
    case DistributionKind::normal:
      return mean_ + sd_ * standard_normal_quantile(u);
    case DistributionKind::truncated_normal:
      if (upper_tail_) {
        const double q = clamp_probability(mass_lo_ - u * (mass_lo_ - mass_hi_));
        x = mean_ - sd_ * standard_normal_quantile(q);
      } else {
        const double p = clamp_probability(mass_lo_ + u * (mass_hi_ - mass_lo_));
        x = mean_ + sd_ * standard_normal_quantile(p);
      }
      break;
  }
  // Keep the result inside the open support even when rounding lands on a bound.
  if (x <= lower_) x = std::nextafter(lower_, upper_);
  if (x >= upper_) x = std::nextafter(upper_, lower_);
  return x;
}

double Distribution::cdf(double x) const {
  if (x <= lower_) return 0.0;
  if (x >= upper_) return 1.0;
  switch (kind_) {
    case DistributionKind::uniform:
      return (x - lower_) / (upper_ - lower_);
    case DistributionKind::normal:
      return standard_normal_cdf((x - mean_) / sd_);
    case DistributionKind::truncated_normal: {
      const double z = (x - mean_) / sd_;
      const double p = upper_tail_
                           ? (mass_lo_ - standard_normal_survival(z)) / (mass_lo_ - mass_hi_)
                           : (standard_normal_cdf(z) - mass_lo_) / (mass_hi_ - mass_lo_);
      return std::clamp(p, 0.0, 1.0);
    }
  }
  return 0.0;
}

}  // namespace clhs
