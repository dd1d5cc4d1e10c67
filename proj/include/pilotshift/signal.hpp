#pragma once

#include <vector>

#include "pilotshift/fft.hpp"

namespace pilotshift {

/// Frequency-domain OFDM symbol, one entry per subcarrier (bin k = index - 1).
struct FreqFrame {
    std::vector<Complex> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
    bool operator==(const FreqFrame&) const = default;
};

/// Time-domain samples of one OFDM symbol; samples.size() == N_s * oversample.
struct TimeSignal {
    std::vector<Complex> samples;
    int oversample = 1;

    std::size_t size() const noexcept { return samples.size(); }
    bool operator==(const TimeSignal&) const = default;
};

TimeSignal ifft(const FreqFrame& frame);
FreqFrame fft(const TimeSignal& signal);

/// L-times oversampled synthesis. The spectrum is zero-padded in the middle
/// (bins 0..N/2-1 stay at the low end, N/2..N-1 move to the top) and the
/// result is scaled so its mean sample power equals the L = 1 signal's.
TimeSignal oversampled_ifft(const FreqFrame& frame, int oversample);

double mean_power(const TimeSignal& signal);

/// max|x|^2 / mean|x|^2. Throws InputError on an all-zero or empty signal.
double papr_linear(const TimeSignal& signal);
double papr_db(const TimeSignal& signal);

}  // namespace pilotshift
