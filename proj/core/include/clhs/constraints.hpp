#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clhs/design.hpp"
#include "clhs/distributions.hpp"
#include "clhs/rng.hpp"
#include "clhs/sample_matrix.hpp"

namespace clhs {

// Redraw budget per linked column. Long chains with tight links (gamma near
// 0.45) occasionally need a few thousand redraws for their last columns.
inline constexpr std::size_t kDefaultMaxRetries = 10000;

// n x n binary matrix between a left and a right column.
//   less:    c(i, j) = 1 iff right[i] > left[j]
//   greater: c(i, j) = 1 iff right[i] < left[j]
// Row i is element i of the right column, column j element j of the left
// one. The pair honors the relation row-wise iff the diagonal is all ones.
class CompatibilityMatrix {
 public:
  CompatibilityMatrix(std::span<const double> left, std::span<const double> right,
                      Relation rel);
  // Builds from explicit 0/1 rows (tests, hand-made examples).
  static CompatibilityMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }

  std::size_t diagonal_sum() const;
  bool diagonal_all_ones() const { return diagonal_sum() == n_; }

  friend bool operator==(const CompatibilityMatrix&, const CompatibilityMatrix&) = default;

 private:
  explicit CompatibilityMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

CompatibilityMatrix compatibility_matrix(std::span<const double> left,
                                         std::span<const double> right, Relation rel);

// Row sums of the compatibility matrix (number of left elements each right
// element can be paired with) and their ascending sort.
struct ScoreVector {
  std::vector<std::size_t> scores;
  std::vector<std::size_t> sorted;

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
};

ScoreVector score_vector(const CompatibilityMatrix& c);

// Same result as score_vector(compatibility_matrix(left, right, rel)) in
// O(n log n) time without materializing the matrix.
ScoreVector score_vector(std::span<const double> left, std::span<const double> right,
                         Relation rel);

// min_i (sorted_i - i) with i = 1..n; 0 for an empty vector.
long criterion_slack(const ScoreVector& s);

// A permutation of the right column honoring the relation exists iff the
// i-th smallest score is at least i for every i.
bool existence_criterion(const ScoreVector& s);

// Bound precondition for a link. less: b_left <= b_right and
// h_left <= h_right; greater: b_left >= b_right and h_left >= h_right.
// Throws SpecError("constraint requires bounded marginals") when either
// support is unbounded.
bool bounds_precondition(const Distribution& left, const Distribution& right,
                         Relation rel);

// Human-readable description of the first failing bound inequality, or an
// empty string when the precondition holds.
std::string bounds_violation(const Distribution& left, const Distribution& right,
                             Relation rel);

// Permutes the right column so that every row satisfies the relation
// against the (untouched) left column.
//
// Left elements are visited hardest first: descending for less, ascending
// for greater, ties in original index order. Each one is paired with a
// right element drawn uniformly among those still unused and compatible
// with it; the chosen element is then blocked. Because the compatible sets
// are nested along this order, the greedy pass cannot dead-end once the
// existence criterion holds. The result is verified against the diagonal
// of the new compatibility matrix before returning.
//
// Throws NoSatisfyingPermutation when the criterion fails and DefectError
// if the final check does not pass.
std::vector<double> permute_to_satisfy(std::span<const double> left,
                                       std::span<const double> right, Relation rel,
                                       Rng& rng);

// Constrained LHS. Draws an LHS for every column, keeps column 1, then for
// j = 2..p in order: if a link joins j-1 and j, redraws column j as a fresh
// LHS column until the existence criterion holds against the already
// permuted column j-1 (at most max_retries redraws) and permutes it into
// place. Columns without an incoming link keep their LHS draw.
//
// The spec is validated before any sampling. Throws RetryExhausted naming
// the column, its last criterion slack and the link's gamma.
SampleMatrix clhs(const DesignSpec& spec, std::size_t n, Rng& rng,
                  std::size_t max_retries = kDefaultMaxRetries);

}  // namespace clhs
