// File: include/tnd/rng.hpp
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tnd {

using Rng = std::mt19937_64;

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Stable sub-stream seeds: independent components (runs, modes, phases)
// hash their role into the base seed instead of sharing one stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view salt) {
  std::uint64_t h = fnv1a64(salt);
  h ^= base + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline std::string rng_state_string(const Rng& rng) {
  std::ostringstream os;
  os << rng;
  return os.str();
}

inline Rng rng_from_state_string(const std::string& state) {
  Rng rng;
  std::istringstream is(state);
  is >> rng;
  return rng;
}

// Portable draws. std:: distributions leave the number of engine calls
// unspecified, which would make logged runs non-reproducible across
// standard libraries; these consume a fixed, documented number of draws.

// One draw; uniform in [0, 1) with 53 random bits.
inline double uniform_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// One draw; uniform in [0, n) by 128-bit multiply (bias < 2^-64, irrelevant
// for the n in play here).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  using u128 = unsigned __int128;
  return static_cast<std::size_t>(
      (static_cast<u128>(rng()) * static_cast<u128>(n)) >> 64);
}

// Two draws; standard normal via Box-Muller.
inline double normal_double(Rng& rng) {
  double u1 = uniform_double(rng);
  double u2 = uniform_double(rng);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

// Fisher-Yates; n-1 draws.
template <typename T>
inline void shuffle_portable(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_index(rng, i)]);
  }
}

}  // namespace tnd
