#include "pilotshift/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pilotshift/error.hpp"

namespace pilotshift {

TimeSignal ifft(const FreqFrame& frame) {
    TimeSignal out{frame.symbols, 1};
    ifft_inplace(out.samples);
    return out;
}

FreqFrame fft(const TimeSignal& signal) {
    FreqFrame out{signal.samples};
    fft_inplace(out.symbols);
    return out;
}

TimeSignal oversampled_ifft(const FreqFrame& frame, int oversample) {
    if (oversample < 1) {
        throw ConfigError("oversampling factor must be >= 1, got " + std::to_string(oversample));
    }
    const std::size_t n = frame.size();
    if (!is_power_of_two(n)) {
        throw ConfigError("frame length " + std::to_string(n) + " is not a power of two");
    }
    if (oversample == 1 || n == 1) {
        // a single bin has no mid-band; padding it would only add a scale
        TimeSignal out = ifft(frame);
        if (oversample > 1) {
            out.samples.assign(static_cast<std::size_t>(oversample), frame.symbols[0]);
            out.oversample = oversample;
        }
        return out;
    }
    const auto factor = static_cast<std::size_t>(oversample);
    if (!is_power_of_two(factor)) {
        throw ConfigError("oversampling factor must be a power of two, got " +
                          std::to_string(oversample));
    }
    const std::size_t total = n * factor;
    const std::size_t half = n / 2;
    TimeSignal out{std::vector<Complex>(total), oversample};
    std::copy_n(frame.symbols.begin(), half, out.samples.begin());
    std::copy_n(frame.symbols.begin() + static_cast<std::ptrdiff_t>(half), n - half,
                out.samples.end() - static_cast<std::ptrdiff_t>(n - half));
    ifft_inplace(out.samples);
    const double gain = std::sqrt(static_cast<double>(factor));
    for (auto& v : out.samples) v *= gain;
    return out;
}

double mean_power(const TimeSignal& signal) {
    if (signal.samples.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& v : signal.samples) sum += std::norm(v);
    return sum / static_cast<double>(signal.size());
}

double papr_linear(const TimeSignal& signal) {
    double peak = 0.0;
    double sum = 0.0;
    for (const auto& v : signal.samples) {
        const double p = std::norm(v);
        peak = std::max(peak, p);
        sum += p;
    }
    if (sum <= 0.0) throw InputError("PAPR of an all-zero signal is undefined");
    return peak * static_cast<double>(signal.size()) / sum;
}

double papr_db(const TimeSignal& signal) { return 10.0 * std::log10(papr_linear(signal)); }

}  // namespace pilotshift
