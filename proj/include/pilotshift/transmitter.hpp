#pragma once

#include <optional>
#include <span>

#include "pilotshift/pilot_grid.hpp"

namespace pilotshift {

struct ShiftSearchResult {
    int best_offset = 1;
    double best_papr_db = 0.0;
    FreqFrame frame;  // frequency-domain frame of the chosen arrangement
    int candidates_evaluated = 0;
};

/// Tries pilot offsets r_o = 1, 2, ..., R, measuring PAPR of each arrangement
/// after L-times oversampled synthesis, and keeps the lowest (earliest offset
/// on ties). With `early_exit_db`, stops at the first arrangement whose PAPR
/// falls strictly below it.
ShiftSearchResult minimize_papr(std::span<const Complex> data, const PilotGeometry& geometry,
                                int oversample, std::optional<double> early_exit_db = std::nullopt);

/// Time-domain signal for the selected arrangement. No side information is
/// attached: the offset is recoverable only by blind detection.
TimeSignal transmit(const ShiftSearchResult& result, int oversample_tx);

}  // namespace pilotshift
