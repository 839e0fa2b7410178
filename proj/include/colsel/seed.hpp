#pragma once

#include <cstdint>

namespace colsel {

/// splitmix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stable 64-bit sub-seed for stream `stream` under master `seed`. Any
/// (seed, stream) pair can be regenerated anywhere without shared state.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL));
}

/// Named sub-streams used when one master seed drives a whole run.
namespace streams {
inline constexpr std::uint64_t svd = 0x5356440000000001ULL;
inline constexpr std::uint64_t hybrid = 0x4859420000000002ULL;
}  // namespace streams

}  // namespace colsel
