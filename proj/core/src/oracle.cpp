#include "clhs/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "clhs/errors.hpp"

namespace clhs::oracle {
namespace {

void guard(std::span<const double> left, std::span<const double> right) {
  if (left.size() != right.size()) throw DomainError("oracle: column length mismatch");
  if (left.size() > kMaxOracleSize) {
    throw DomainError("oracle: refusing n = " + std::to_string(left.size()) +
                      " (enumeration limited to n <= " + std::to_string(kMaxOracleSize) + ")");
  }
}

bool row_wise(std::span<const double> left, std::span<const double> right,
              const std::vector<std::size_t>& perm, Relation rel) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (!satisfies(left[i], right[perm[i]], rel)) return false;
  }
  return true;
}

// Visits every permutation of indices; stops when visit returns false.
template <typename Visit>
void for_each_permutation(std::size_t n, Visit visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (!visit(perm)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

bool brute_force_exists(std::span<const double> left, std::span<const double> right,
                        Relation rel) {
  guard(left, right);
  bool found = false;
  for_each_permutation(left.size(), [&](const std::vector<std::size_t>& perm) {
    found = row_wise(left, right, perm, rel);
    return !found;
  });
  return found;
}

std::uint64_t count_satisfying_permutations(std::span<const double> left,
                                            std::span<const double> right, Relation rel) {
  guard(left, right);
  std::uint64_t count = 0;
  for_each_permutation(left.size(), [&](const std::vector<std::size_t>& perm) {
    if (row_wise(left, right, perm, rel)) ++count;
    return true;
  });
  return count;
}

}  // namespace clhs::oracle
