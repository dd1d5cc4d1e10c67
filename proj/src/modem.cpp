#include "pilotshift/modem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pilotshift/error.hpp"
#include "pilotshift/rng.hpp"

namespace pilotshift {

DataSymbols qpsk_map(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) {
        throw InputError("QPSK mapping needs an even bit count, got " + std::to_string(bits.size()));
    }
    constexpr double a = std::numbers::sqrt2 / 2.0;
    DataSymbols out;
    out.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        out.emplace_back(bits[i] ? -a : a, bits[i + 1] ? -a : a);
    }
    return out;
}

BitVector qpsk_demap(std::span<const Complex> symbols) {
    BitVector out;
    out.reserve(symbols.size() * 2);
    for (const auto& s : symbols) {
        out.push_back(s.real() < 0.0 ? 1 : 0);
        out.push_back(s.imag() < 0.0 ? 1 : 0);
    }
    return out;
}

BitVector random_bits(std::size_t count, std::uint64_t seed) {
    Engine engine = make_engine(seed);
    BitVector out;
    out.reserve(count);
    while (out.size() < count) {
        std::uint64_t word = engine();
        for (int b = 0; b < 64 && out.size() < count; ++b, word >>= 1) {
            out.push_back(static_cast<std::uint8_t>(word & 1u));
        }
    }
    return out;
}

std::size_t count_bit_errors(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) {
        throw InputError("bit vectors differ in length: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    }
    std::size_t errors = 0;
    for (std::size_t i = 0; i < a.size(); ++i) errors += (a[i] != b[i]) ? 1 : 0;
    return errors;
}

}  // namespace pilotshift
