#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rmab {

// Deterministic random source. All distributions are derived from the raw
// 64-bit stream by fixed arithmetic (never std::*_distribution, whose output
// is implementation-defined), so identical seeds give identical draws on any
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

 private:
  std::mt19937_64 gen_;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

// FNV-1a over the key, finalized with splitmix64.
inline std::uint64_t hash_key(std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return detail::splitmix64(h);
}

// Derives an independent substream seed from a base seed and a stream index.
// Used to split per-episode / per-stage streams so results do not depend on
// evaluation order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return detail::splitmix64(base ^ detail::splitmix64(stream));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  return derive_seed(base, hash_key(tag));
}

}  // namespace rmab
