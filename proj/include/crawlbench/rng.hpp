#pragma once

// Self-contained PRNG so that seeded runs replay bit-identically on every
// platform. std::uniform_int_distribution is free to differ between standard
// libraries, which would silently break recorded traces, so the engine
// (xoshiro256**), the seeding (SplitMix64) and the draw helpers are all
// pinned here.

#include <array>
#include <cstdint>
#include <string_view>

namespace crawlbench {

inline std::uint64_t splitmix64_next(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64_next(s);
  }

  // xoshiro256** 1.0 (Blackman & Vigna), public domain reference algorithm.
  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform integer in [0, bound). Rejection sampling, so the result is
  // unbiased and identical everywhere. bound must be nonzero.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

// FNV-1a over raw bytes; used for seed derivation and content hashing. The
// byte form carries its own name: with an overload, a const char* argument
// would silently bind here (pointer conversion outranks the string_view
// constructor) and take the hash state for a byte count.
inline std::uint64_t fnv1a64_bytes(const void* data, std::size_t len,
                                   std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  return fnv1a64_bytes(s.data(), s.size(), h);
}

// Deterministic per-run seed: every (master seed, graph, crawler, seed index)
// combination gets its own independent stream. The exact recipe is part of
// the reproducibility contract, documented in the README.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view a,
                                 std::string_view b, std::uint64_t index) {
  std::uint64_t h = fnv1a64_bytes(&master, sizeof master);
  h = fnv1a64(a, h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(b, h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64_bytes(&index, sizeof index);
  // one extra mix so that short inputs still flip high bits
  return splitmix64_next(h);
}

}  // namespace crawlbench
