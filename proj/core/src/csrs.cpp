#include "clhs/csrs.hpp"

#include "clhs/errors.hpp"

namespace clhs {
namespace {

// Draws attempted per row before a numerical tie with the bound is reported.
constexpr int kTieRedraws = 64;

}  // namespace

SampleMatrix csrs(const DesignSpec& spec, std::size_t n, Rng& rng) {
  if (n == 0) throw DomainError("sample size n must be >= 1");

  SampleMatrix m(spec.names(), n);
  const std::uint64_t base = rng.next_u64();
  std::vector<double> previous;
  std::vector<double> column(n);

  for (std::size_t j = 0; j < spec.size(); ++j) {
    const Distribution& dist = spec.variable(j);
    Rng stream = Rng::derive(base, j);
    const auto link = spec.link_into(j);

    for (std::size_t i = 0; i < n; ++i) {
      if (!link) {
        column[i] = dist.quantile(stream.uniform_open());
        continue;
      }
      const double bound = previous[i];
      const double cut = dist.cdf(bound);
      const bool less = link->relation == Relation::less;
      const double lo = less ? cut : 0.0;
      const double hi = less ? 1.0 : cut;
      if (!(lo < hi)) {
        throw EmptyTruncation(i, j,
                              "row " + std::to_string(i + 1) + ": no admissible value for '" +
                                  dist.name() + "' " + std::string(symbol(link->relation)) +
                                  " bound " + std::to_string(bound) + " (truncation is empty)");
      }
      bool drawn = false;
      for (int attempt = 0; attempt < kTieRedraws && !drawn; ++attempt) {
        const double u = lo + (hi - lo) * stream.uniform_open();
        if (!(u > 0.0 && u < 1.0)) continue;
        const double x = dist.quantile(u);
        if (satisfies(bound, x, link->relation)) {
          column[i] = x;
          drawn = true;
        }
      }
      if (!drawn) {
        throw EmptyTruncation(i, j,
                              "row " + std::to_string(i + 1) + ": truncation interval for '" +
                                  dist.name() + "' is numerically empty");
      }
    }
    m.set_column(j, column);
    previous = column;
  }
  m.set_seed(rng.seed());
  return m;
}

}  // namespace clhs
