// Seedable, splittable random streams. Streams are derived by hashing the
// user seed with stream labels through splitmix64, so sampling different
// settings (or chunks of one run) in parallel stays reproducible.

#pragma once

#include <cstdint>
#include <random>

namespace ghz {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream id for (seed, a, b); distinct label pairs give independent streams.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

inline std::mt19937_64 make_engine(std::uint64_t stream) { return std::mt19937_64(stream); }

// Uniform double in [0, 1) with 53 random bits; avoids the
// implementation-defined std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace ghz
