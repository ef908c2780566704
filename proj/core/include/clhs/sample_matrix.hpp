#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clhs {

// n x p matrix of experiments: row i is one run, column j one variable.
// Stored column-major because every sampler works a column at a time.
// All values must be finite.
class SampleMatrix {
 public:
  SampleMatrix(std::vector<std::string> names, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  double operator()(std::size_t row, std::size_t col) const {
    return values_[col * rows_ + row];
  }

  std::span<const double> column(std::size_t col) const;
  void set_column(std::size_t col, std::span<const double> values);
  void set(std::size_t row, std::size_t col, double value);

  // Seed the matrix was generated from, when known.
  const std::optional<std::uint64_t>& seed() const { return seed_; }
  void set_seed(std::optional<std::uint64_t> seed) { seed_ = seed; }

  friend bool operator==(const SampleMatrix&, const SampleMatrix&) = default;

 private:
  std::vector<std::string> names_;
  std::size_t rows_;
  std::vector<double> values_;
  std::optional<std::uint64_t> seed_;
};

}  // namespace clhs
