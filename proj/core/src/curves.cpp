#include "clhs/curves.hpp"

#include <algorithm>
#include <charconv>

#include "clhs/errors.hpp"

namespace clhs {
namespace {

void check_knots(std::span<const double> levels) {
  if (levels.empty()) throw DomainError("curve needs at least one level");
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (!(levels[k - 1] < levels[k])) throw DomainError("curve levels must be strictly increasing");
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

double interpolate_curve(std::span<const double> levels, std::span<const double> values,
                         double query) {
  if (levels.size() != values.size()) throw DomainError("levels and values differ in length");
  check_knots(levels);
  if (!(query >= levels.front() && query <= levels.back())) {
    throw DomainError("query outside the level range (no extrapolation)");
  }
  const auto it = std::lower_bound(levels.begin(), levels.end(), query);
  const auto k = static_cast<std::size_t>(it - levels.begin());
  if (levels[k] == query) return values[k];
  const double t = (query - levels[k - 1]) / (levels[k] - levels[k - 1]);
  return values[k - 1] + t * (values[k] - values[k - 1]);
}

CurveTable make_curve_table(const SampleMatrix& m, std::span<const double> knots,
                            std::span<const double> queries) {
  if (knots.size() != m.cols()) {
    throw DomainError("need one level per column: " + std::to_string(knots.size()) +
                      " levels for " + std::to_string(m.cols()) + " columns");
  }
  check_knots(knots);
  CurveTable table;
  table.levels.assign(queries.empty() ? knots.begin() : queries.begin(),
                      queries.empty() ? knots.end() : queries.end());
  std::vector<double> row_values(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) row_values[j] = m(i, j);
    std::vector<double> row;
    row.reserve(table.levels.size());
    for (double q : table.levels) row.push_back(interpolate_curve(knots, row_values, q));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<double> even_grid(std::span<const double> knots, std::size_t count) {
  check_knots(knots);
  if (count == 0) return {};
  if (count == 1) return {knots.front()};
  std::vector<double> grid(count);
  const double lo = knots.front();
  const double hi = knots.back();
  for (std::size_t k = 0; k < count; ++k) {
    grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  grid.back() = hi;
  return grid;
}

std::string write_curve_table(const CurveTable& table) {
  std::string out = "row";
  for (double level : table.levels) out += "," + format_double(level);
  out += '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out += std::to_string(i + 1);
    for (double v : table.rows[i]) out += "," + format_double(v);
    out += '\n';
  }
  return out;
}

}  // namespace clhs
