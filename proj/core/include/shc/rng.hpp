#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace shc {

using Rng = std::mt19937_64;

/// splitmix64 finaliser.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-sensitive combination of seed words; derived streams never collide
/// with their parent for practical inputs.
constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t word) noexcept {
  return splitmix64(seed ^ splitmix64(word + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t mix(std::uint64_t seed, std::initializer_list<std::uint64_t> words) noexcept {
  for (auto w : words) seed = mix(seed, w);
  return seed;
}

inline Rng make_stream(std::uint64_t seed) { return Rng(splitmix64(seed)); }

inline Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
  return make_stream(mix(seed, words));
}

}  // namespace shc
