#pragma once

#include <span>
#include <vector>

#include "pilotshift/modem.hpp"
#include "pilotshift/signal.hpp"

namespace pilotshift {

/// Pilot geometry shared by transmitter and receiver: everything except the
/// offset of the first pilot.
struct PilotGeometry {
    int n_s = 64;        // subcarriers
    int n_p = 4;         // pilots
    double power = 9.0;  // linear pilot power P; pilots carry sqrt(P) + 0j

    int spacing() const noexcept { return n_p > 0 ? n_s / n_p : 0; }
    int data_count() const noexcept { return n_s - n_p; }
    /// Throws ConfigError unless 1 <= n_p <= n_s, n_p | n_s and P > 0.
    void validate() const;
};

/// Geometry plus the first-pilot offset r_o, 1 <= r_o <= spacing().
struct PilotLayout {
    PilotGeometry geometry;
    int offset = 1;

    void validate() const;
};

/// 1-based pilot indices {r_o, r_o + R, ..., r_o + (N_p - 1) R}.
std::vector<int> pilot_positions(const PilotLayout& layout);

/// Pilots at their positions, data in the remaining slots in ascending order.
FreqFrame assemble_frame(std::span<const Complex> data, const PilotLayout& layout);

/// Symbols at every index not listed in `positions` (1-based), ascending.
DataSymbols disassemble_frame(const FreqFrame& frame, std::span<const int> positions);

/// 1-based wrap of v in [1, 2 N_s] back into [1, N_s], written the way the
/// modular rule reads: v mod (N_s + 1) + 1 when that wraps, v otherwise.
int wrap_index(int v, int n_s);

/// Offset (1..R) of the residue class containing 1-based index `position`.
int residue_offset(int position, int spacing) noexcept;

}  // namespace pilotshift
