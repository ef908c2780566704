#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clhs/design.hpp"
#include "clhs/distributions.hpp"
#include "clhs/rng.hpp"
#include "clhs/sample_matrix.hpp"

namespace clhs {

// Simple random sampling: every entry is quantile(F_j, u), u ~ U(0,1) i.i.d.
SampleMatrix srs(const DesignSpec& spec, std::size_t n, Rng& rng);

// Latin hypercube sampling. Column j holds
//   x_i = F_j^{-1}((perm_i - jitter_i) / n)
// with perm a fresh permutation of {1..n} and jitter_i ~ U(0,1) (open), so
// each of the n equiprobable strata receives exactly one point.
SampleMatrix lhs(const DesignSpec& spec, std::size_t n, Rng& rng);

// One LHS column for a single marginal.
std::vector<double> lhs_column(const Distribution& dist, std::size_t n, Rng& rng);

// 1-based stratum of x under dist: ceil(n * cdf(x)), clamped to [1, n].
std::size_t stratum_of(const Distribution& dist, double x, std::size_t n);

// Column j is true iff its strata {ceil(n * F_j(x))} are exactly {1..n}.
// Throws SpecError when the matrix width does not match the spec.
std::vector<bool> verify_lhs(const SampleMatrix& m, const DesignSpec& spec);

bool is_lhs_column(std::span<const double> column, const Distribution& dist);

}  // namespace clhs
