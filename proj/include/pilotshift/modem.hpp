#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pilotshift/fft.hpp"

namespace pilotshift {

using BitVector = std::vector<std::uint8_t>;
using DataSymbols = std::vector<Complex>;

/// Gray-coded QPSK with unit symbol energy. The first bit of each pair selects
/// the sign of the real axis, the second bit the sign of the imaginary axis
/// (0 -> +, 1 -> -). Throws InputError on an odd bit count.
DataSymbols qpsk_map(std::span<const std::uint8_t> bits);

/// Per-axis sign decision; a component of exactly zero decides 0.
BitVector qpsk_demap(std::span<const Complex> symbols);

/// `count` i.i.d. uniform bits, deterministic in `seed`.
BitVector random_bits(std::size_t count, std::uint64_t seed);

std::size_t count_bit_errors(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace pilotshift
