#pragma once

#include <cstddef>
#include <cstdint>

namespace chaingroup {

inline constexpr const char *kVersion = "0.1.0";

/// Default RNG seed for every sampled check; overridable with --seed.
inline constexpr std::uint64_t kDefaultSeed = 0xC41A10;

/// Default cap for brute-force element enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 20000;

/// Census bound: n <= 7 by default, n = 8 opt-in via CHAINGROUP_MAX_N.
inline constexpr int kDefaultCensusLimit = 7;
inline constexpr int kHardCensusLimit = 8;

} // namespace chaingroup
