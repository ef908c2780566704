#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace clhs {

// Seeded pseudo-random source. The engine (mt19937_64) and every conversion
// below are fully specified, so a seed yields the same stream on any
// platform; std::uniform_*_distribution is avoided for that reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  // Number of 64-bit words drawn so far.
  std::uint64_t position() const { return position_; }

  std::uint64_t next_u64();

  // Uniform on the open interval (0,1): 53-bit grid, zero rejected.
  double uniform_open();

  // Uniform integer in [0, bound). bound must be positive.
  std::size_t below(std::size_t bound);

  // Independent stream keyed by (base, index). Samplers draw one base word
  // per call and give column j the stream derive(base, j), so columns do
  // not depend on the order in which they are produced.
  static Rng derive(std::uint64_t base, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Fisher-Yates shuffle of {1, ..., n}. Throws DomainError for n = 0.
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

}  // namespace clhs
