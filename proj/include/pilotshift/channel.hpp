#pragma once

#include <cstdint>
#include <optional>

#include "pilotshift/signal.hpp"

namespace pilotshift {

/// AWGN setting. An empty snr_db means a noise-free channel.
///
/// SNR is referenced to unit data-symbol energy: the complex noise added to
/// each sample has variance 10^(-snr_db/10), split evenly over I and Q. With
/// the unitary FFT the per-subcarrier noise variance is the same, so this is
/// Es/N0 of the QPSK data symbols; pilot power does not enter it.
struct ChannelConfig {
    std::optional<double> snr_db;
    std::uint64_t seed = 0;

    static ChannelConfig noise_free() { return {}; }
};

double noise_variance(double snr_db) noexcept;

TimeSignal awgn(const TimeSignal& signal, const ChannelConfig& config);

}  // namespace pilotshift
