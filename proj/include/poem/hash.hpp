//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string_view>

namespace poem {

// Pinned seed: fingerprints and graph keys must be bit-identical across
// platforms and runs, so nothing here may depend on std::hash.
inline constexpr std::uint64_t kHashSeed = 0x706f656d6b697431ULL;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Streaming 64-bit mixer over words. Not cryptographic; collisions are
// acceptable at fingerprint-folding and dataset-deduplication scale.
class Hash64 {
 public:
  constexpr explicit Hash64(std::uint64_t seed = kHashSeed) : state_(seed) {}

  constexpr Hash64& add(std::uint64_t v) {
    state_ = splitmix64(state_ ^ v);
    return *this;
  }

  constexpr Hash64& add_bytes(std::string_view bytes) {
    for (unsigned char c : bytes) add(c);
    return *this;
  }

  [[nodiscard]] constexpr std::uint64_t value() const {
    return splitmix64(state_);
  }

 private:
  std::uint64_t state_;
};

// Small deterministic RNG for splits and test-data generation. Seeded
// explicitly; never from wall clock.
class SplitMixRng {
 public:
  constexpr explicit SplitMixRng(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n).
  constexpr std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  // Uniform double in [0, 1).
  constexpr double unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(T& seq) {
    for (std::size_t i = seq.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(seq[i - 1], seq[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace poem
