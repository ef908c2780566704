#include "clhs/design.hpp"

#include <algorithm>
#include <set>

#include "clhs/constraints.hpp"
#include "clhs/errors.hpp"

namespace clhs {

std::string_view to_string(Relation rel) { return rel == Relation::less ? "less" : "greater"; }

std::string_view symbol(Relation rel) { return rel == Relation::less ? "<" : ">"; }

DesignSpec::DesignSpec(std::vector<Distribution> variables, std::vector<ConstraintLink> links,
                       nlohmann::json metadata)
    : variables_(std::move(variables)), links_(std::move(links)), metadata_(std::move(metadata)) {
  if (variables_.empty()) throw SpecError("variables: at least one variable is required");

  std::set<std::string> seen;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    const auto& name = variables_[j].name();
    const std::string path = "variables[" + std::to_string(j) + "].name";
    if (name.empty()) throw SpecError(path + ": name must not be empty");
    if (!seen.insert(name).second) throw SpecError(path + ": duplicate name '" + name + "'");
  }

  std::stable_sort(links_.begin(), links_.end(),
                   [](const ConstraintLink& a, const ConstraintLink& b) { return a.left < b.left; });
  for (std::size_t k = 0; k < links_.size(); ++k) {
    const auto& link = links_[k];
    const std::string path = "links[" + std::to_string(k) + "]";
    if (link.right() >= variables_.size()) {
      throw SpecError(path + ": link " + std::to_string(link.left + 1) + " -> " +
                      std::to_string(link.right() + 1) + " is out of range");
    }
    if (k > 0 && links_[k - 1].left == link.left) {
      throw SpecError(path + ": duplicate link between variables " +
                      std::to_string(link.left + 1) + " and " + std::to_string(link.right() + 1));
    }
    const auto& left = variables_[link.left];
    const auto& right = variables_[link.right()];
    const std::string label = " (" + left.name() + " " + std::string(symbol(link.relation)) +
                              " " + right.name() + ")";
    if (!left.support().bounded() || !right.support().bounded()) {
      throw SpecError(path + label + ": constraint requires bounded marginals");
    }
    if (auto why = bounds_violation(left, right, link.relation); !why.empty()) {
      throw SpecError(path + label + ": " + why);
    }
  }
}

std::vector<std::string> DesignSpec::names() const {
  std::vector<std::string> out;
  out.reserve(variables_.size());
  for (const auto& v : variables_) out.push_back(v.name());
  return out;
}

std::optional<ConstraintLink> DesignSpec::link_into(std::size_t col) const {
  for (const auto& link : links_) {
    if (link.right() == col) return link;
  }
  return std::nullopt;
}

}  // namespace clhs
