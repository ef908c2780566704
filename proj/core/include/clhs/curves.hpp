#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "clhs/sample_matrix.hpp"

namespace clhs {

// Piecewise linear interpolation through (levels[k], values[k]). Exact at the
// knots; no extrapolation. Throws DomainError for unsorted levels, length
// mismatch or a query outside [levels.front(), levels.back()].
double interpolate_curve(std::span<const double> levels, std::span<const double> values,
                         double query);

// One sampled curve per experiment, evaluated at `levels`.
struct CurveTable {
  std::vector<double> levels;
  std::vector<std::vector<double>> rows;
};

// Reads each row of m as a curve with knots at `knots` (one per column) and
// evaluates it at `queries`. Empty queries means the knots themselves.
CurveTable make_curve_table(const SampleMatrix& m, std::span<const double> knots,
                            std::span<const double> queries = {});

// `count` points evenly spaced over [knots.front(), knots.back()], knots
// included when count >= 2.
std::vector<double> even_grid(std::span<const double> knots, std::size_t count);

// CSV with header "row,<level_1>,...,<level_k>" and one line per curve.
std::string write_curve_table(const CurveTable& table);

}  // namespace clhs
