#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace clhs {

// Argument outside the domain of an operation (u outside (0,1), n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A design specification (or a sample file checked against one) is invalid.
// The message carries the offending field path where one exists.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The existence criterion rejects the pair, so no permutation of the right
// column can satisfy the relation.
class NoSatisfyingPermutation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// cSRS could not draw a value for some row because the truncation interval
// left by the previous column is empty.
class EmptyTruncation : public std::runtime_error {
 public:
  EmptyTruncation(std::size_t row, std::size_t column, const std::string& what)
      : std::runtime_error(what), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

// cLHS redrew a column max_retries times without passing the existence
// criterion against its (already permuted) predecessor.
class RetryExhausted : public std::runtime_error {
 public:
  RetryExhausted(std::size_t column, std::string column_name, long last_slack,
                 double link_gamma, const std::string& what)
      : std::runtime_error(what),
        column_(column),
        column_name_(std::move(column_name)),
        last_slack_(last_slack),
        link_gamma_(link_gamma) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& column_name() const noexcept { return column_name_; }
  // min_i (sorted_score_i - i) of the last attempt; negative by definition.
  long last_slack() const noexcept { return last_slack_; }
  double link_gamma() const noexcept { return link_gamma_; }

 private:
  std::size_t column_;
  std::string column_name_;
  long last_slack_;
  double link_gamma_;
};

// Internal invariant broken. Never expected when preconditions hold.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clhs
