#include "pilotshift/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "pilotshift/channel.hpp"
#include "pilotshift/csv.hpp"
#include "pilotshift/error.hpp"
#include "pilotshift/modem.hpp"
#include "pilotshift/rng.hpp"
#include "pilotshift/transmitter.hpp"

namespace pilotshift {

namespace {

template <class Record, class Kernel>
std::vector<Record> run_trials(std::size_t frames, Execution execution, const Kernel& kernel) {
    std::vector<Record> out(frames);
    const auto n = static_cast<std::int64_t>(frames);
    if (execution == Execution::serial) {
        for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = kernel(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = kernel(static_cast<std::size_t>(i));
    }
    return out;
}

DataSymbols trial_symbols(const ExperimentConfig& config, const PilotGeometry& geometry,
                          std::size_t trial) {
    const auto bits = random_bits(2 * static_cast<std::size_t>(geometry.data_count()),
                                  derive_seed(config.seed, trial, Stream::bits));
    return qpsk_map(bits);
}

double rounded(double x) { return std::round(x * 1e9) / 1e9; }

}  // namespace

void ExperimentConfig::validate() const {
    geometry.validate();
    detection.validate();
    if (frames < 1) throw ConfigError("frame count must be at least 1");
    if (oversample < 1) throw ConfigError("oversampling factor must be >= 1");
    if (!is_power_of_two(static_cast<std::size_t>(geometry.n_s))) {
        throw ConfigError("N_s must be a power of two");
    }
    if (!is_power_of_two(static_cast<std::size_t>(oversample))) {
        throw ConfigError("oversampling factor must be a power of two");
    }
    if (!(ccdf_step_db > 0.0) || ccdf_max_db < ccdf_min_db) {
        throw ConfigError("CCDF grid needs a positive step and max >= min");
    }
    for (double s : snr_db) {
        if (!std::isfinite(s)) throw ConfigError("SNR values must be finite");
    }
}

std::vector<double> ExperimentConfig::ccdf_grid() const {
    std::vector<double> grid;
    const auto steps = static_cast<std::size_t>(std::floor((ccdf_max_db - ccdf_min_db) / ccdf_step_db + 1e-9));
    for (std::size_t i = 0; i <= steps; ++i) {
        grid.push_back(rounded(ccdf_min_db + static_cast<double>(i) * ccdf_step_db));
    }
    return grid;
}

std::string ExperimentConfig::manifest() const {
    std::ostringstream os;
    os << "ns=" << geometry.n_s << " np=" << geometry.n_p
       << " pilot_power=" << format_number(geometry.power) << " oversample=" << oversample
       << " snr=";
    for (std::size_t i = 0; i < snr_db.size(); ++i) os << (i ? "," : "") << format_number(snr_db[i]);
    os << " frames=" << frames << " seed=" << seed
       << " gamma=" << format_number(detection.gamma)
       << " gamma_step=" << format_number(detection.gamma_step)
       << " gamma_min=" << format_number(detection.gamma_min)
       << " soft_gamma=" << (detection.soft_gamma ? 1 : 0)
       << " metric=" << (detection.metric == ClassMetric::magnitude ? "magnitude" : "power")
       << " early_exit_db=" << (early_exit_db ? format_number(*early_exit_db) : std::string("none"))
       << " ccdf_grid=" << format_number(ccdf_min_db) << ":" << format_number(ccdf_step_db) << ":"
       << format_number(ccdf_max_db);
    return os.str();
}

std::vector<double> ccdf(std::span<const double> values, std::span<const double> thresholds) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out;
    out.reserve(thresholds.size());
    const double n = static_cast<double>(sorted.size());
    for (double x : thresholds) {
        const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x);
        out.push_back(sorted.empty() ? 0.0 : static_cast<double>(above) / n);
    }
    return out;
}

double tail_threshold(std::span<const double> values, double probability) {
    if (values.empty()) throw InputError("tail threshold of an empty sample");
    if (!(probability > 0.0 && probability < 1.0)) throw InputError("probability must lie in (0, 1)");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const auto k = static_cast<std::size_t>(std::floor(probability * static_cast<double>(sorted.size())));
    return sorted[std::min(k, sorted.size() - 1)];
}

// ---- CCDF ----

PaprRecord papr_trial(const ExperimentConfig& config, std::size_t trial) {
    const DataSymbols data = trial_symbols(config, config.geometry, trial);
    const FreqFrame fixed = assemble_frame(data, PilotLayout{config.geometry, 1});
    const ShiftSearchResult search =
        minimize_papr(data, config.geometry, config.oversample, config.early_exit_db);
    return {papr_db(oversampled_ifft(fixed, config.oversample)), search.best_papr_db, search.best_offset};
}

std::vector<CcdfPoint> aggregate_ccdf(std::span<const PaprRecord> trials, std::span<const double> grid) {
    std::vector<double> baseline;
    std::vector<double> proposed;
    for (const auto& t : trials) {
        baseline.push_back(t.baseline_db);
        proposed.push_back(t.proposed_db);
    }
    const auto cb = ccdf(baseline, grid);
    const auto cp = ccdf(proposed, grid);
    std::vector<CcdfPoint> out;
    for (std::size_t i = 0; i < grid.size(); ++i) out.push_back({grid[i], cb[i], cp[i]});
    return out;
}

CcdfResult run_ccdf(const ExperimentConfig& config) {
    config.validate();
    CcdfResult result{config, {}, {}};
    result.trials = run_trials<PaprRecord>(config.frames, config.execution,
                                           [&](std::size_t t) { return papr_trial(config, t); });
    result.curve = aggregate_ccdf(result.trials, config.ccdf_grid());
    return result;
}

// ---- pilot power sweep ----

double expected_frame_power(const PilotGeometry& g) noexcept {
    return (static_cast<double>(g.n_s - g.n_p) + static_cast<double>(g.n_p) * g.power) /
           static_cast<double>(g.n_s);
}

PowerSweepResult run_pilot_power_sweep(const ExperimentConfig& config, std::span<const double> powers) {
    config.validate();
    if (powers.empty()) throw ConfigError("pilot power list is empty");
    PowerSweepResult result{config, config.ccdf_grid(), {}};
    struct Sample {
        double papr_db = 0.0;
        double mean_power = 0.0;
    };
    for (double p : powers) {
        PilotGeometry geometry = config.geometry;
        geometry.power = p;
        geometry.validate();
        const auto samples = run_trials<Sample>(config.frames, config.execution, [&](std::size_t t) {
            // same data symbols for every power, so curves differ only by P
            const DataSymbols data = trial_symbols(config, geometry, t);
            const FreqFrame frame = assemble_frame(data, PilotLayout{geometry, 1});
            return Sample{papr_db(oversampled_ifft(frame, config.oversample)), mean_power(ifft(frame))};
        });
        PowerSweepCurve curve;
        curve.pilot_power = p;
        for (const auto& s : samples) {
            curve.papr_db.push_back(s.papr_db);
            curve.mean_power.push_back(s.mean_power);
        }
        curve.ccdf = ccdf(curve.papr_db, result.grid);
        result.curves.push_back(std::move(curve));
    }
    return result;
}

// ---- link trials ----

LinkRecord link_trial(const ExperimentConfig& config, std::size_t trial) {
    const PilotGeometry& geometry = config.geometry;
    const auto bits = random_bits(2 * static_cast<std::size_t>(geometry.data_count()),
                                  derive_seed(config.seed, trial, Stream::bits));
    const DataSymbols data = qpsk_map(bits);
    const ShiftSearchResult search =
        minimize_papr(data, geometry, config.oversample, config.early_exit_db);
    const TimeSignal tx = transmit(search, 1);
    const std::vector<int> true_positions = pilot_positions(PilotLayout{geometry, search.best_offset});

    LinkRecord record;
    record.true_offset = search.best_offset;
    record.bits = bits.size();
    record.per_snr.reserve(config.snr_db.size());
    for (std::size_t s = 0; s < config.snr_db.size(); ++s) {
        const ChannelConfig channel{config.snr_db[s], derive_seed(config.seed, trial, Stream::noise, s)};
        const FreqFrame rx = fft(awgn(tx, channel));

        LinkObservation obs;
        obs.initial_gamma_ok = candidate_locations(rx, geometry.power, config.detection.gamma).q.size() >=
                               static_cast<std::size_t>(geometry.n_p);
        const auto detection = try_detect(rx, geometry, config.detection);
        obs.detected_offset = detection ? detection->offset : 0;

        obs.bit_errors_known = count_bit_errors(bits, qpsk_demap(disassemble_frame(rx, true_positions)));
        const std::vector<int> used =
            detection ? detection->positions : pilot_positions(PilotLayout{geometry, 1});
        obs.bit_errors_detected = count_bit_errors(bits, qpsk_demap(disassemble_frame(rx, used)));
        record.per_snr.push_back(obs);
    }
    return record;
}

double DetectionErrorRow::error_pct() const noexcept {
    return frames ? 100.0 * static_cast<double>(errors) / static_cast<double>(frames) : 0.0;
}

std::vector<DetectionErrorRow> aggregate_detection(const ExperimentConfig& config,
                                                   std::span<const LinkRecord> trials) {
    std::vector<DetectionErrorRow> rows;
    for (std::size_t s = 0; s < config.snr_db.size(); ++s) {
        DetectionErrorRow row{config.snr_db[s], config.geometry.n_s, config.geometry.spacing(), 0, 0};
        for (const auto& t : trials) {
            row.errors += t.per_snr[s].detected_offset != t.true_offset ? 1 : 0;
            ++row.frames;
        }
        rows.push_back(row);
    }
    return rows;
}

DetectionErrorResult run_detection_error(const ExperimentConfig& config) {
    config.validate();
    DetectionErrorResult result{config, {}, {}};
    result.trials = run_trials<LinkRecord>(config.frames, config.execution,
                                           [&](std::size_t t) { return link_trial(config, t); });
    result.rows = aggregate_detection(config, result.trials);
    return result;
}

double SurfaceRow::error_pct() const noexcept {
    return frames ? 100.0 * static_cast<double>(errors) / static_cast<double>(frames) : 0.0;
}

SurfaceResult run_detection_surface(const ExperimentConfig& config, std::span<const double> gammas,
                                    std::span<const double> powers) {
    config.validate();
    if (gammas.empty() || powers.empty()) throw ConfigError("gamma and power grids must be non-empty");
    if (config.snr_db.empty()) throw ConfigError("surface needs an SNR");
    for (double g : gammas) {
        if (!(g > 0.0 && g <= 1.0)) throw ConfigError("gamma must lie in (0, 1]");
    }
    SurfaceResult result{config, {}};
    const double snr = config.snr_db.front();
    for (double p : powers) {
        PilotGeometry geometry = config.geometry;
        geometry.power = p;
        geometry.validate();
        // per trial: one bit per gamma, set when that gamma misdetects
        const auto misses = run_trials<std::vector<std::uint8_t>>(
            config.frames, config.execution, [&](std::size_t t) {
                const DataSymbols data = trial_symbols(config, geometry, t);
                const ShiftSearchResult search =
                    minimize_papr(data, geometry, config.oversample, config.early_exit_db);
                const ChannelConfig channel{snr, derive_seed(config.seed, t, Stream::noise)};
                const FreqFrame rx = fft(awgn(transmit(search, 1), channel));
                std::vector<std::uint8_t> miss;
                for (double g : gammas) {
                    const auto d = detect_at_gamma(rx, geometry, g, config.detection.metric);
                    miss.push_back(!d || d->offset != search.best_offset ? 1 : 0);
                }
                return miss;
            });
        for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
            SurfaceRow row{gammas[gi], p, 0, config.frames};
            for (const auto& m : misses) row.errors += m[gi];
            result.rows.push_back(row);
        }
    }
    return result;
}

double BerRow::ber_known() const noexcept {
    return bits ? static_cast<double>(errors_known) / static_cast<double>(bits) : 0.0;
}

double BerRow::ber_detected() const noexcept {
    return bits ? static_cast<double>(errors_detected) / static_cast<double>(bits) : 0.0;
}

std::vector<BerRow> aggregate_ber(const ExperimentConfig& config, std::span<const LinkRecord> trials) {
    std::vector<BerRow> rows;
    for (std::size_t s = 0; s < config.snr_db.size(); ++s) {
        BerRow row{config.snr_db[s], 0, 0, 0};
        for (const auto& t : trials) {
            row.errors_known += t.per_snr[s].bit_errors_known;
            row.errors_detected += t.per_snr[s].bit_errors_detected;
            row.bits += t.bits;
        }
        rows.push_back(row);
    }
    return rows;
}

BerResult run_ber(const ExperimentConfig& config) {
    config.validate();
    BerResult result{config, {}, {}};
    result.trials = run_trials<LinkRecord>(config.frames, config.execution,
                                           [&](std::size_t t) { return link_trial(config, t); });
    result.rows = aggregate_ber(config, result.trials);
    return result;
}

double qpsk_ber_theory(double snr_db) noexcept {
    const double snr = std::pow(10.0, snr_db / 10.0);
    return 0.5 * std::erfc(std::sqrt(snr / 2.0));
}

}  // namespace pilotshift
