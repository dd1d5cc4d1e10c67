#include "pilotshift/transmitter.hpp"

#include <string>

#include "pilotshift/error.hpp"

namespace pilotshift {

namespace {

// Offsets whose peak lands on a sample shared by every arrangement (n = 0 is
// the plain sum of all symbols) tie exactly; FFT rounding must not split them.
constexpr double kTieToleranceDb = 1e-9;

}  // namespace

ShiftSearchResult minimize_papr(std::span<const Complex> data, const PilotGeometry& geometry,
                                int oversample, std::optional<double> early_exit_db) {
    geometry.validate();
    if (oversample < 1) {
        throw ConfigError("oversampling factor must be >= 1, got " + std::to_string(oversample));
    }
    ShiftSearchResult best;
    const int spacing = geometry.spacing();
    for (int offset = 1; offset <= spacing; ++offset) {
        FreqFrame frame = assemble_frame(data, PilotLayout{geometry, offset});
        const double papr = papr_db(oversampled_ifft(frame, oversample));
        ++best.candidates_evaluated;
        if (offset == 1 || papr < best.best_papr_db - kTieToleranceDb) {
            best.best_offset = offset;
            best.best_papr_db = papr;
            best.frame = std::move(frame);
        }
        if (early_exit_db && papr < *early_exit_db) break;
    }
    return best;
}

TimeSignal transmit(const ShiftSearchResult& result, int oversample_tx) {
    return oversampled_ifft(result.frame, oversample_tx);
}

}  // namespace pilotshift
