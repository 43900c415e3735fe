#ifndef NORDEN_PRNG_HPP
#define NORDEN_PRNG_HPP

#include <cstdint>
#include <utility>

namespace norden {

/// Deterministic 64-bit generator (splitmix64), advanced functionally: each
/// draw returns the value together with the successor state. Identical seeds
/// give identical sequences on every platform.
struct SeededGenerator {
  std::uint64_t state = 0;
  int bound = 5;  // coefficient magnitudes drawn from [-bound, bound]

  std::pair<std::uint64_t, SeededGenerator> next() const {
    SeededGenerator succ = *this;
    succ.state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = succ.state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return {z, succ};
  }

  /// Uniform-ish draw in [0, n); the modulo bias is irrelevant here.
  std::pair<std::uint64_t, SeededGenerator> below(std::uint64_t n) const {
    auto [v, succ] = next();
    return {v % n, succ};
  }
};

}  // namespace norden

#endif
