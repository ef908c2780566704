#include <sstream>

#include "clhs/constraints.hpp"
#include "clhs/diagnostics.hpp"
#include "clhs/errors.hpp"
#include "clhs/sampling.hpp"

namespace clhs {

SampleMatrix clhs(const DesignSpec& spec, std::size_t n, Rng& rng, std::size_t max_retries) {
  if (n == 0) throw DomainError("sample size n must be >= 1");
  if (max_retries == 0) throw DomainError("max_retries must be >= 1");

  SampleMatrix m(spec.names(), n);
  const std::uint64_t base = rng.next_u64();
  std::vector<double> previous;

  for (std::size_t j = 0; j < spec.size(); ++j) {
    const Distribution& dist = spec.variable(j);
    Rng stream = Rng::derive(base, j);
    std::vector<double> column = lhs_column(dist, n, stream);

    if (const auto link = spec.link_into(j)) {
      ScoreVector scores = score_vector(previous, column, link->relation);
      std::size_t redraws = 0;
      while (!existence_criterion(scores)) {
        if (redraws == max_retries) {
          const long slack = criterion_slack(scores);
          const double g = gamma(spec.variable(link->left), dist, link->relation);
          std::ostringstream os;
          os << "column " << (j + 1) << " ('" << dist.name() << "'): existence criterion still "
             << "fails after " << max_retries << " redraws (last slack " << slack
             << ", link gamma " << g << ")";
          throw RetryExhausted(j, dist.name(), slack, g, os.str());
        }
        column = lhs_column(dist, n, stream);
        ++redraws;
        scores = score_vector(previous, column, link->relation);
      }
      column = permute_to_satisfy(previous, column, link->relation, stream);
    }

    m.set_column(j, column);
    previous = std::move(column);
  }
  m.set_seed(rng.seed());
  return m;
}

}  // namespace clhs
