#pragma once

#include <cstdint>
#include <random>

namespace pilotshift {

using Engine = std::mt19937_64;

/// Stream selectors so bits and noise of one trial never share a stream.
enum class Stream : std::uint64_t { bits = 1, noise = 2, aux = 3 };

/// Seed for the (master, trial, stream, sub) tuple. Mixing is splitmix64 based,
/// so neighbouring trials get unrelated streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, Stream stream,
                          std::uint64_t sub = 0) noexcept;

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

}  // namespace pilotshift
