#include "clhs/constraints.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clhs/errors.hpp"

namespace clhs {
namespace {

void require_pair(std::span<const double> left, std::span<const double> right) {
  if (left.size() != right.size()) {
    throw DomainError("column length mismatch: left has " + std::to_string(left.size()) +
                      ", right has " + std::to_string(right.size()));
  }
  if (left.empty()) throw DomainError("columns must hold at least one value");
}

std::string fmt_pair(double a, const char* op, double b) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << a << " " << op << " " << b << ")";
  return os.str();
}

}  // namespace

CompatibilityMatrix::CompatibilityMatrix(std::span<const double> left,
                                         std::span<const double> right, Relation rel)
    : n_(left.size()) {
  require_pair(left, right);
  cells_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      cells_[i * n_ + j] = satisfies(left[j], right[i], rel) ? 1 : 0;
    }
  }
}

CompatibilityMatrix CompatibilityMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  CompatibilityMatrix c(rows.size());
  for (std::size_t i = 0; i < c.n_; ++i) {
    if (rows[i].size() != c.n_) throw DomainError("compatibility matrix must be square");
    for (std::size_t j = 0; j < c.n_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        throw DomainError("compatibility matrix entries must be 0 or 1");
      }
      c.cells_[i * c.n_ + j] = static_cast<std::uint8_t>(rows[i][j]);
    }
  }
  return c;
}

std::size_t CompatibilityMatrix::diagonal_sum() const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < n_; ++i) sum += cells_[i * n_ + i];
  return sum;
}

CompatibilityMatrix compatibility_matrix(std::span<const double> left,
                                         std::span<const double> right, Relation rel) {
  return CompatibilityMatrix(left, right, rel);
}

ScoreVector score_vector(const CompatibilityMatrix& c) {
  ScoreVector s;
  s.scores.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) s.scores[i] += c(i, j) ? 1 : 0;
  }
  s.sorted = s.scores;
  std::sort(s.sorted.begin(), s.sorted.end());
  return s;
}

ScoreVector score_vector(std::span<const double> left, std::span<const double> right,
                         Relation rel) {
  require_pair(left, right);
  std::vector<double> sorted_left(left.begin(), left.end());
  std::sort(sorted_left.begin(), sorted_left.end());
  ScoreVector s;
  s.scores.reserve(right.size());
  for (double r : right) {
    if (rel == Relation::less) {
      // left elements strictly below r
      s.scores.push_back(static_cast<std::size_t>(
          std::lower_bound(sorted_left.begin(), sorted_left.end(), r) - sorted_left.begin()));
    } else {
      // left elements strictly above r
      s.scores.push_back(static_cast<std::size_t>(
          sorted_left.end() - std::upper_bound(sorted_left.begin(), sorted_left.end(), r)));
    }
  }
  s.sorted = s.scores;
  std::sort(s.sorted.begin(), s.sorted.end());
  return s;
}

long criterion_slack(const ScoreVector& s) {
  if (s.sorted.empty()) return 0;
  long slack = static_cast<long>(s.sorted.front()) - 1;
  for (std::size_t i = 0; i < s.sorted.size(); ++i) {
    slack = std::min(slack, static_cast<long>(s.sorted[i]) - static_cast<long>(i + 1));
  }
  return slack;
}

bool existence_criterion(const ScoreVector& s) { return criterion_slack(s) >= 0; }

std::string bounds_violation(const Distribution& left, const Distribution& right,
                             Relation rel) {
  const Support l = left.support();
  const Support r = right.support();
  if (!l.bounded() || !r.bounded()) {
    throw SpecError("constraint requires bounded marginals");
  }
  if (rel == Relation::less) {
    if (!(l.lower <= r.lower)) {
      return "bound precondition b_left <= b_right violated " + fmt_pair(l.lower, ">", r.lower);
    }
    if (!(l.upper <= r.upper)) {
      return "bound precondition h_left <= h_right violated " + fmt_pair(l.upper, ">", r.upper);
    }
  } else {
    if (!(l.lower >= r.lower)) {
      return "bound precondition b_left >= b_right violated " + fmt_pair(l.lower, "<", r.lower);
    }
    if (!(l.upper >= r.upper)) {
      return "bound precondition h_left >= h_right violated " + fmt_pair(l.upper, "<", r.upper);
    }
  }
  return {};
}

bool bounds_precondition(const Distribution& left, const Distribution& right, Relation rel) {
  return bounds_violation(left, right, rel).empty();
}

std::vector<double> permute_to_satisfy(std::span<const double> left,
                                       std::span<const double> right, Relation rel, Rng& rng) {
  require_pair(left, right);
  const std::size_t n = left.size();

  if (const long slack = criterion_slack(score_vector(left, right, rel)); slack < 0) {
    throw NoSatisfyingPermutation("no satisfying permutation exists (criterion slack " +
                                  std::to_string(slack) + ")");
  }

  const bool less = rel == Relation::less;

  // Left elements hardest first; stable so ties keep index order.
  std::vector<std::size_t> left_order(n);
  std::iota(left_order.begin(), left_order.end(), std::size_t{0});
  std::stable_sort(left_order.begin(), left_order.end(), [&](std::size_t a, std::size_t b) {
    return less ? left[a] > left[b] : left[a] < left[b];
  });

  // Right elements most permissive first, so the compatible ones for each
  // successive left element form a growing prefix.
  std::vector<std::size_t> right_order(n);
  std::iota(right_order.begin(), right_order.end(), std::size_t{0});
  std::stable_sort(right_order.begin(), right_order.end(), [&](std::size_t a, std::size_t b) {
    return less ? right[a] > right[b] : right[a] < right[b];
  });

  // Unblocked right indices compatible with the current left element.
  std::vector<std::size_t> candidates;
  candidates.reserve(n);
  std::size_t next_right = 0;
  std::vector<double> out(n);

  for (std::size_t idx : left_order) {
    while (next_right < n && satisfies(left[idx], right[right_order[next_right]], rel)) {
      candidates.push_back(right_order[next_right++]);
    }
    if (candidates.empty()) {
      throw DefectError("permute_to_satisfy: no compatible element left for row " +
                        std::to_string(idx + 1));
    }
    const std::size_t pick = rng.below(candidates.size());
    out[idx] = right[candidates[pick]];
    candidates[pick] = candidates.back();
    candidates.pop_back();
  }

  // Final objective: every diagonal entry of the new compatibility matrix is 1.
  std::size_t diagonal = 0;
  for (std::size_t i = 0; i < n; ++i) diagonal += satisfies(left[i], out[i], rel) ? 1 : 0;
  if (diagonal != n) {
    throw DefectError("permute_to_satisfy: final check failed (" + std::to_string(diagonal) +
                      " of " + std::to_string(n) + " rows satisfied)");
  }
  return out;
}

}  // namespace clhs
