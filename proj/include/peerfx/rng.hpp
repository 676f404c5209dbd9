#pragma once

#include <cstdint>
#include <random>

namespace peerfx {

// splitmix64 finalizer; used to derive independent substreams from
// (seed, index...) tuples so that scheduling order never affects results.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a) {
  return splitmix64(seed ^ splitmix64(a + 0x632be59bd9b4e019ULL));
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  return mix_seed(mix_seed(seed, a, b), c);
}

// Substream engine: deterministic function of the mixed seed only.
inline std::mt19937_64 substream(uint64_t seed, uint64_t a) {
  return std::mt19937_64(mix_seed(seed, a));
}

inline std::mt19937_64 substream(uint64_t seed, uint64_t a, uint64_t b) {
  return std::mt19937_64(mix_seed(seed, a, b));
}

// U(0,1) from a raw 64-bit hash, open at both ends.
inline double hash_uniform(uint64_t h) {
  return (static_cast<double>(h >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

// Poisson(1) by inverse-CDF walk on a single uniform. Used for per-cluster
// bootstrap weights that must be a pure function of (seed, replicate, cluster).
inline double poisson_one(double u) {
  double p = 0.36787944117144233;  // exp(-1)
  double cdf = p;
  int k = 0;
  while (u > cdf && k < 64) {
    ++k;
    p /= static_cast<double>(k);
    cdf += p;
  }
  return static_cast<double>(k);
}

}  // namespace peerfx
