#include "pilotshift/channel.hpp"

#include <cmath>
#include <random>

#include "pilotshift/error.hpp"
#include "pilotshift/rng.hpp"

namespace pilotshift {

double noise_variance(double snr_db) noexcept { return std::pow(10.0, -snr_db / 10.0); }

TimeSignal awgn(const TimeSignal& signal, const ChannelConfig& config) {
    if (!config.snr_db) return signal;
    if (!std::isfinite(*config.snr_db)) throw ConfigError("SNR must be finite");
    const double sigma = std::sqrt(noise_variance(*config.snr_db) / 2.0);
    Engine engine = make_engine(config.seed);
    std::normal_distribution<double> normal(0.0, sigma);
    TimeSignal out = signal;
    for (auto& v : out.samples) {
        const double re = normal(engine);
        const double im = normal(engine);
        v += Complex(re, im);
    }
    return out;
}

}  // namespace pilotshift
