#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clhs/design.hpp"
#include "clhs/distributions.hpp"
#include "clhs/sample_matrix.hpp"

namespace clhs {

// Slope of the empirical gamma -> correlation relation, taken as published.
inline constexpr double kGammaToCorrelation = 2.778;
// The relation was only observed for gamma up to this value.
inline constexpr double kGammaHeuristicLimit = 0.3;

// Constraint intensity: area of the forbidden triangle over the area of the
// bound rectangle.
//   less:    max(0, h_l - b_r)^2 / (2 (h_l - b_l)(h_r - b_r))
//   greater: max(0, h_r - b_l)^2 / (2 (h_l - b_l)(h_r - b_r))
// Lies in [0, 0.5] whenever the bound precondition holds. Throws SpecError
// for unbounded marginals or when the precondition fails.
double gamma(const Distribution& left, const Distribution& right, Relation rel);

struct CorrelationPrediction {
  double rho = 0.0;
  // gamma beyond kGammaHeuristicLimit: the linear relation is extrapolated.
  bool extrapolated = false;
};

// rho ~= 2.778 * gamma. Throws DomainError for negative gamma.
CorrelationPrediction predicted_correlation(double gamma);

// Sample Pearson coefficient. Throws DomainError for mismatched lengths,
// fewer than two points or zero variance in either column.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Kolmogorov-Smirnov distance between the empirical CDF of `sample` and dist.
double ks_statistic(std::span<const double> sample, const Distribution& dist);

// Asymptotic one-sample KS critical value c(alpha) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

struct ColumnDiagnostics {
  std::string name;
  bool stratified = false;
  double ks = 0.0;
};

struct LinkDiagnostics {
  std::size_t left = 0;
  std::size_t right = 0;
  Relation relation = Relation::less;
  std::optional<double> gamma;
  std::optional<double> predicted_rho;
  bool prediction_extrapolated = false;
  std::optional<double> empirical_rho;
  std::size_t violations = 0;
  std::vector<std::string> notes;
};

struct DiagnosticsReport {
  std::size_t rows = 0;
  std::vector<ColumnDiagnostics> columns;
  std::vector<LinkDiagnostics> links;

  bool all_stratified() const;
  bool all_links_hold() const;
};

// Throws SpecError when the matrix width or column names disagree with the
// spec.
DiagnosticsReport report(const SampleMatrix& m, const DesignSpec& spec);

}  // namespace clhs
