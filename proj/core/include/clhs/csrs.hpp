#pragma once

#include <cstddef>

#include "clhs/design.hpp"
#include "clhs/rng.hpp"
#include "clhs/sample_matrix.hpp"

namespace clhs {

// Constrained simple random sampling.
//
// Column 1 (and any column without an incoming link) is drawn i.i.d. from its
// marginal. For a link j -> j+1, row i of column j+1 is drawn from F_{j+1}
// truncated by the already drawn x_j: u ~ U(F_{j+1}(x_j), 1) for less,
// u ~ U(0, F_{j+1}(x_j)) for greater, then x = F_{j+1}^{-1}(u). Every link
// holds row-wise but the marginals of constrained columns drift away from
// their targets.
//
// Throws EmptyTruncation when some row leaves no room for the next column
// (cannot happen when the bound precondition holds).
SampleMatrix csrs(const DesignSpec& spec, std::size_t n, Rng& rng);

}  // namespace clhs
