#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "clhs/design.hpp"

namespace clhs::oracle {

// Enumeration is n!; inputs longer than this are refused.
inline constexpr std::size_t kMaxOracleSize = 8;

// True iff some permutation of `right` satisfies the relation row-wise
// against `left`. Plain enumeration over index permutations, early exit.
// Throws DomainError for mismatched lengths or n > kMaxOracleSize.
bool brute_force_exists(std::span<const double> left, std::span<const double> right,
                        Relation rel);

// Number of index permutations of `right` satisfying the relation.
std::uint64_t count_satisfying_permutations(std::span<const double> left,
                                            std::span<const double> right,
                                            Relation rel);

}  // namespace clhs::oracle
