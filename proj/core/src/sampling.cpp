#include "clhs/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "clhs/errors.hpp"

namespace clhs {
namespace {

void require_rows(std::size_t n) {
  if (n == 0) throw DomainError("sample size n must be >= 1");
}

}  // namespace

std::vector<double> lhs_column(const Distribution& dist, std::size_t n, Rng& rng) {
  require_rows(n);
  const auto perm = random_permutation(n, rng);
  std::vector<double> column(n);
  const auto dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double jitter = rng.uniform_open();
    column[i] = dist.quantile((static_cast<double>(perm[i]) - jitter) / dn);
  }
  return column;
}

SampleMatrix srs(const DesignSpec& spec, std::size_t n, Rng& rng) {
  require_rows(n);
  SampleMatrix m(spec.names(), n);
  const std::uint64_t base = rng.next_u64();
  std::vector<double> column(n);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    Rng stream = Rng::derive(base, j);
    for (auto& x : column) x = spec.variable(j).quantile(stream.uniform_open());
    m.set_column(j, column);
  }
  m.set_seed(rng.seed());
  return m;
}

SampleMatrix lhs(const DesignSpec& spec, std::size_t n, Rng& rng) {
  require_rows(n);
  SampleMatrix m(spec.names(), n);
  const std::uint64_t base = rng.next_u64();
  for (std::size_t j = 0; j < spec.size(); ++j) {
    Rng stream = Rng::derive(base, j);
    m.set_column(j, lhs_column(spec.variable(j), n, stream));
  }
  m.set_seed(rng.seed());
  return m;
}

std::size_t stratum_of(const Distribution& dist, double x, std::size_t n) {
  const double scaled = std::ceil(static_cast<double>(n) * dist.cdf(x));
  if (scaled < 1.0) return 1;
  if (scaled > static_cast<double>(n)) return n;
  return static_cast<std::size_t>(scaled);
}

bool is_lhs_column(std::span<const double> column, const Distribution& dist) {
  const std::size_t n = column.size();
  if (n == 0) return false;
  std::vector<bool> hit(n, false);
  for (double x : column) {
    const double k = std::ceil(static_cast<double>(n) * dist.cdf(x));
    if (!(k >= 1.0 && k <= static_cast<double>(n))) return false;
    const auto idx = static_cast<std::size_t>(k) - 1;
    if (hit[idx]) return false;
    hit[idx] = true;
  }
  return true;
}

std::vector<bool> verify_lhs(const SampleMatrix& m, const DesignSpec& spec) {
  if (m.cols() != spec.size()) {
    throw SpecError("sample matrix has " + std::to_string(m.cols()) + " columns, spec has " +
                    std::to_string(spec.size()) + " variables");
  }
  std::vector<bool> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = is_lhs_column(m.column(j), spec.variable(j));
  return out;
}

}  // namespace clhs
