#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "clhs/distributions.hpp"

namespace clhs {

// Relation required between a link's left and right columns, row by row.
// less: left < right. greater: left > right. Comparisons are strict.
enum class Relation { less, greater };

std::string_view to_string(Relation rel);
std::string_view symbol(Relation rel);

// True iff (left, right) honors the relation strictly.
inline bool satisfies(double left, double right, Relation rel) {
  return rel == Relation::less ? left < right : left > right;
}

// Constraint between column `left` and column `left + 1` (0-based).
struct ConstraintLink {
  std::size_t left = 0;
  Relation relation = Relation::less;

  std::size_t right() const { return left + 1; }

  friend bool operator==(const ConstraintLink&, const ConstraintLink&) = default;
};

// Ordered variable list plus a chain of pairwise links between consecutive
// variables. The constructor enforces: unique non-empty names, links only
// between consecutive in-range variables, at most one link per pair, and
// the bound precondition (b_left <= b_right, h_left <= h_right for less,
// mirrored for greater) on every link. Violations throw SpecError.
class DesignSpec {
 public:
  DesignSpec(std::vector<Distribution> variables,
             std::vector<ConstraintLink> links = {},
             nlohmann::json metadata = nlohmann::json::object());

  std::size_t size() const { return variables_.size(); }
  const std::vector<Distribution>& variables() const { return variables_; }
  const Distribution& variable(std::size_t j) const { return variables_.at(j); }
  std::vector<std::string> names() const;

  // Links sorted by left index.
  const std::vector<ConstraintLink>& links() const { return links_; }
  // Link whose right column is `col`, if any.
  std::optional<ConstraintLink> link_into(std::size_t col) const;

  const nlohmann::json& metadata() const { return metadata_; }

  friend bool operator==(const DesignSpec&, const DesignSpec&) = default;

 private:
  std::vector<Distribution> variables_;
  std::vector<ConstraintLink> links_;
  nlohmann::json metadata_;
};

}  // namespace clhs
