#pragma once

#include <cstdint>
#include <vector>

namespace wavemark {

// Deterministic generators pinned as part of the stego format contract:
// the scrambling permutations and all stochastic attacks must reproduce
// bit-exactly from a seed across builds. See docs/formats.md.

// One splitmix64 step: advances state and returns the mixed output.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Convenience single-shot mix (state = x, one step).
std::uint64_t splitmix64_mix(std::uint64_t x);

// xoshiro256** seeded with four consecutive splitmix64 outputs.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed);

  std::uint64_t next();
  // Uniform in [0,1) with 53 random bits.
  double next_double();
  // Uniform in [0,n), n > 0, via next() % n.
  std::uint64_t next_below(std::uint64_t n);
  // Standard normal via Box-Muller; one variate per uniform pair.
  double next_gaussian();

 private:
  std::uint64_t state_[4];
};

// Fisher-Yates permutation of 0..n-1 drawn from the given stream.
std::vector<int> random_permutation(int n, Xoshiro256ss& rng);

}  // namespace wavemark
