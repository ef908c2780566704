#include "clhs/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "clhs/constraints.hpp"
#include "clhs/errors.hpp"
#include "clhs/sampling.hpp"

namespace clhs {

double gamma(const Distribution& left, const Distribution& right, Relation rel) {
  const Support l = left.support();
  const Support r = right.support();
  if (!l.bounded() || !r.bounded()) {
    throw SpecError("constraint intensity requires bounded marginals");
  }
  if (auto why = bounds_violation(left, right, rel); !why.empty()) {
    throw SpecError("constraint intensity undefined: " + why);
  }
  // Leg of the forbidden right triangle; zero when the supports do not overlap.
  const double leg = rel == Relation::less ? l.upper - r.lower : r.upper - l.lower;
  const double clipped = std::max(0.0, leg);
  return clipped * clipped / (2.0 * (l.upper - l.lower) * (r.upper - r.lower));
}

CorrelationPrediction predicted_correlation(double gamma) {
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  return {kGammaToCorrelation * gamma, gamma > kGammaHeuristicLimit};
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("pearson: length mismatch");
  if (xs.size() < 2) throw DomainError("pearson: need at least two points");
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) throw DomainError("pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double ks_statistic(std::span<const double> sample, const Distribution& dist) {
  if (sample.empty()) throw DomainError("ks_statistic: empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = dist.cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("ks_critical_value: need n >= 1 and alpha in (0,1)");
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

bool DiagnosticsReport::all_stratified() const {
  return std::all_of(columns.begin(), columns.end(),
                     [](const ColumnDiagnostics& c) { return c.stratified; });
}

bool DiagnosticsReport::all_links_hold() const {
  return std::all_of(links.begin(), links.end(),
                     [](const LinkDiagnostics& l) { return l.violations == 0; });
}

DiagnosticsReport report(const SampleMatrix& m, const DesignSpec& spec) {
  if (m.cols() != spec.size()) {
    throw SpecError("sample matrix has " + std::to_string(m.cols()) + " columns, spec has " +
                    std::to_string(spec.size()) + " variables");
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.names()[j] != spec.variable(j).name()) {
      throw SpecError("column " + std::to_string(j + 1) + " is named '" + m.names()[j] +
                      "', spec expects '" + spec.variable(j).name() + "'");
    }
  }

  DiagnosticsReport r;
  r.rows = m.rows();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& dist = spec.variable(j);
    r.columns.push_back({dist.name(), is_lhs_column(m.column(j), dist),
                         m.rows() > 0 ? ks_statistic(m.column(j), dist) : 0.0});
  }

  for (const auto& link : spec.links()) {
    LinkDiagnostics d;
    d.left = link.left;
    d.right = link.right();
    d.relation = link.relation;
    const auto& left = spec.variable(link.left);
    const auto& right = spec.variable(link.right());
    try {
      d.gamma = gamma(left, right, link.relation);
      const auto prediction = predicted_correlation(*d.gamma);
      d.predicted_rho = prediction.rho;
      d.prediction_extrapolated = prediction.extrapolated;
      if (prediction.extrapolated) {
        d.notes.push_back("gamma above 0.3: linear correlation prediction is extrapolated");
      }
    } catch (const SpecError& e) {
      d.notes.push_back(std::string("gamma omitted: ") + e.what());
    }
    try {
      d.empirical_rho = pearson(m.column(link.left), m.column(link.right()));
    } catch (const DomainError& e) {
      d.notes.push_back(std::string("empirical correlation undefined: ") + e.what());
    }
    const auto lc = m.column(link.left);
    const auto rc = m.column(link.right());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!satisfies(lc[i], rc[i], link.relation)) ++d.violations;
    }
    r.links.push_back(std::move(d));
  }
  return r;
}

}  // namespace clhs
