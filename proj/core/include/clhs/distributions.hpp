#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

namespace clhs {

enum class DistributionKind { uniform, normal, truncated_normal };

std::string_view to_string(DistributionKind kind);

// Support interval [lower, upper]; infinite ends mean the side is unbounded.
struct Support {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool lower_bounded() const { return std::isfinite(lower); }
  bool upper_bounded() const { return std::isfinite(upper); }
  bool bounded() const { return lower_bounded() && upper_bounded(); }

  friend bool operator==(const Support&, const Support&) = default;
};

// One-dimensional marginal with an invertible continuous CDF.
//
// Instances are immutable once built; the factories validate parameters and
// throw DomainError on b >= h or sd <= 0.
class Distribution {
 public:
  static Distribution uniform(double lower, double upper, std::string name = {});
  static Distribution normal(double mean, double sd, std::string name = {});
  static Distribution truncated_normal(double mean, double sd, double lower,
                                       double upper, std::string name = {});

  DistributionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  // Parameters. mean/sd are meaningless for uniform; lower/upper are infinite
  // for normal.
  double mean() const { return mean_; }
  double sd() const { return sd_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }

  // Inverse CDF on (0,1). Strictly increasing; the result always lies in the
  // open support interval. Throws DomainError when u is not in (0,1).
  double quantile(double u) const;

  // 0 at or below the lower bound, 1 at or above the upper bound.
  double cdf(double x) const;

  Support support() const { return {lower_, upper_}; }

  Distribution with_name(std::string name) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Distribution(DistributionKind kind, double mean, double sd, double lower,
               double upper, std::string name);

  DistributionKind kind_;
  double mean_;
  double sd_;
  double lower_;
  double upper_;
  std::string name_;
  // truncated normal: standardized bounds and their normal CDF / survival
  // values, cached so quantile() and cdf() stay cheap
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double mass_lo_ = 0.0;
  double mass_hi_ = 0.0;
  bool upper_tail_ = false;
};

// Standard normal CDF and its inverse. The inverse uses a rational
// approximation polished with one Halley step (|error| ~ 1e-15 in u).
double standard_normal_cdf(double z);
double standard_normal_survival(double z);
double standard_normal_quantile(double u);

}  // namespace clhs
