// rng.hpp -- seedable randomness with substream derivation.
//
// Reproducibility contract: mt19937_64's output sequence is pinned by the C++
// standard, seeds are derived with splitmix64 arithmetic, Bernoulli draws
// compare the top 53 engine bits against floor(p * 2^53), and shuffles are
// hand-rolled Fisher-Yates with rejection sampling.  No
// implementation-defined <random> distributions are used, so identical
// (seed, stream) inputs give identical results on every platform.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace satlab {

struct RngSpec {
  uint64_t seed = 0;
  uint64_t stream = 0;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// order-sensitive combiner: mix(a, b) != mix(b, a) in general
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (0x9E3779B97F4A7C15ULL * (b + 1)));
}

inline std::mt19937_64 make_engine(const RngSpec& spec) {
  return std::mt19937_64(mix_seed(spec.seed, spec.stream));
}

// true with probability p; one engine draw per call
inline bool bernoulli(std::mt19937_64& eng, double p) {
  if (p >= 1.0) { eng(); return true; }
  if (p <= 0.0) { eng(); return false; }
  const uint64_t threshold = uint64_t(p * 9007199254740992.0);  // p * 2^53
  return (eng() >> 11) < threshold;
}

// uniform integer in [0, bound) by rejection; bound >= 1
inline uint64_t uniform_below(std::mt19937_64& eng, uint64_t bound) {
  const uint64_t limit = ~0ULL - ~0ULL % bound;
  uint64_t x;
  do { x = eng(); } while (x >= limit);
  return x % bound;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& eng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[uniform_below(eng, i)]);
}

}  // namespace satlab
