#include "clhs/sample_matrix.hpp"

#include <cmath>
#include <string>

#include "clhs/errors.hpp"

namespace clhs {

SampleMatrix::SampleMatrix(std::vector<std::string> names, std::size_t rows)
    : names_(std::move(names)), rows_(rows), values_(names_.size() * rows, 0.0) {}

std::span<const double> SampleMatrix::column(std::size_t col) const {
  if (col >= cols()) throw DomainError("column index out of range");
  return std::span<const double>(values_).subspan(col * rows_, rows_);
}

void SampleMatrix::set_column(std::size_t col, std::span<const double> values) {
  if (col >= cols()) throw DomainError("column index out of range");
  if (values.size() != rows_) {
    throw DomainError("column length " + std::to_string(values.size()) + " != rows " +
                      std::to_string(rows_));
  }
  for (std::size_t i = 0; i < rows_; ++i) set(i, col, values[i]);
}

void SampleMatrix::set(std::size_t row, std::size_t col, double value) {
  if (row >= rows_ || col >= cols()) throw DomainError("matrix index out of range");
  if (!std::isfinite(value)) {
    throw DomainError("non-finite value at row " + std::to_string(row + 1) + ", column " +
                      names_[col]);
  }
  values_[col * rows_ + row] = value;
}

}  // namespace clhs
