#include "clhs/rng.hpp"

#include <numeric>

#include "clhs/errors.hpp"

namespace clhs {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

std::uint64_t Rng::next_u64() {
  ++position_;
  return engine_();
}

double Rng::uniform_open() {
  std::uint64_t bits = 0;
  do {
    bits = next_u64() >> 11;
  } while (bits == 0);
  return static_cast<double>(bits) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t bound) {
  if (bound == 0) throw DomainError("Rng::below requires a positive bound");
  // Reject the short low band so every residue is equally likely.
  const std::uint64_t range = bound;
  const std::uint64_t threshold = (0 - range) % range;
  while (true) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return static_cast<std::size_t>(r % range);
  }
}

Rng Rng::derive(std::uint64_t base, std::uint64_t index) {
  return Rng(splitmix64(base ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  if (n == 0) throw DomainError("random_permutation requires n >= 1");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }
  return perm;
}

}  // namespace clhs
