#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pilotshift/detector.hpp"
#include "pilotshift/pilot_grid.hpp"

namespace pilotshift {

/// Trial-loop driver. `parallel` spreads trials over OpenMP threads; `serial`
/// is the reference loop. Both produce identical records because every trial
/// draws from its own (seed, trial)-derived streams.
enum class Execution { serial, parallel };

struct ExperimentConfig {
    PilotGeometry geometry{64, 4, 9.0};
    int oversample = 8;  // PAPR measurement / shift selection factor
    std::vector<double> snr_db{0.0, 3.0, 6.0, 9.0};
    std::size_t frames = 100000;
    std::uint64_t seed = 1;
    DetectionConfig detection;
    std::optional<double> early_exit_db;
    double ccdf_min_db = 4.0;
    double ccdf_max_db = 12.0;
    double ccdf_step_db = 0.1;
    Execution execution = Execution::parallel;

    void validate() const;
    std::vector<double> ccdf_grid() const;
    /// Single-line `key=value` summary of everything that affects results.
    std::string manifest() const;
};

// ---- statistics helpers ----

/// Pr(value > threshold) for each threshold.
std::vector<double> ccdf(std::span<const double> values, std::span<const double> thresholds);

/// Smallest sample x with Pr(value > x) <= probability (empirical tail quantile).
double tail_threshold(std::span<const double> values, double probability);

// ---- CCDF of PAPR: fixed r_o = 1 versus pilot shifting ----

struct PaprRecord {
    double baseline_db = 0.0;
    double proposed_db = 0.0;
    int offset = 1;
    bool operator==(const PaprRecord&) const = default;
};

struct CcdfPoint {
    double threshold_db = 0.0;
    double baseline = 0.0;
    double proposed = 0.0;
};

struct CcdfResult {
    ExperimentConfig config;
    std::vector<PaprRecord> trials;
    std::vector<CcdfPoint> curve;
};

PaprRecord papr_trial(const ExperimentConfig& config, std::size_t trial);
std::vector<CcdfPoint> aggregate_ccdf(std::span<const PaprRecord> trials, std::span<const double> grid);
CcdfResult run_ccdf(const ExperimentConfig& config);

// ---- pilot power sweep of conventional (r_o = 1) OFDM ----

struct PowerSweepCurve {
    double pilot_power = 0.0;
    std::vector<double> papr_db;       // per trial
    std::vector<double> mean_power;    // per trial, Nyquist-rate signal
    std::vector<double> ccdf;          // on config.ccdf_grid()
};

struct PowerSweepResult {
    ExperimentConfig config;
    std::vector<double> grid;
    std::vector<PowerSweepCurve> curves;
};

/// Expected mean sample power of a frame: (N_s - N_p + N_p P) / N_s.
double expected_frame_power(const PilotGeometry& geometry) noexcept;

PowerSweepResult run_pilot_power_sweep(const ExperimentConfig& config, std::span<const double> powers);

// ---- link trials: shift selection, AWGN, blind detection, demapping ----

struct LinkObservation {
    int detected_offset = 0;  // 0 when fixed-gamma detection found too few candidates
    std::size_t bit_errors_known = 0;
    std::size_t bit_errors_detected = 0;
    bool initial_gamma_ok = false;  // M >= N_p at the starting gamma
    bool operator==(const LinkObservation&) const = default;
};

struct LinkRecord {
    int true_offset = 1;
    std::size_t bits = 0;  // data bits per frame
    std::vector<LinkObservation> per_snr;
    bool operator==(const LinkRecord&) const = default;
};

/// One frame: random bits, QPSK, shift search at config.oversample, synthesis
/// at L = 1, then for every SNR in config.snr_db an independent AWGN draw
/// followed by detection and hard decisions at known and detected positions.
LinkRecord link_trial(const ExperimentConfig& config, std::size_t trial);

struct DetectionErrorRow {
    double snr_db = 0.0;
    int n_s = 0;
    int spacing = 0;
    std::size_t errors = 0;
    std::size_t frames = 0;
    double error_pct() const noexcept;
};

struct DetectionErrorResult {
    ExperimentConfig config;
    std::vector<LinkRecord> trials;
    std::vector<DetectionErrorRow> rows;
};

std::vector<DetectionErrorRow> aggregate_detection(const ExperimentConfig& config,
                                                   std::span<const LinkRecord> trials);
DetectionErrorResult run_detection_error(const ExperimentConfig& config);

/// Error rate over a (gamma, pilot power) grid at config.snr_db.front(), with
/// a fixed gamma per cell (no soft fallback; too few candidates is an error).
struct SurfaceRow {
    double gamma = 0.0;
    double pilot_power = 0.0;
    std::size_t errors = 0;
    std::size_t frames = 0;
    double error_pct() const noexcept;
};

struct SurfaceResult {
    ExperimentConfig config;
    std::vector<SurfaceRow> rows;
};

SurfaceResult run_detection_surface(const ExperimentConfig& config, std::span<const double> gammas,
                                    std::span<const double> powers);

struct BerRow {
    double snr_db = 0.0;
    std::size_t errors_known = 0;
    std::size_t errors_detected = 0;
    std::size_t bits = 0;
    double ber_known() const noexcept;
    double ber_detected() const noexcept;
};

struct BerResult {
    ExperimentConfig config;
    std::vector<LinkRecord> trials;
    std::vector<BerRow> rows;
};

std::vector<BerRow> aggregate_ber(const ExperimentConfig& config, std::span<const LinkRecord> trials);
BerResult run_ber(const ExperimentConfig& config);

/// Closed-form QPSK (Gray) bit error rate on AWGN at the channel's SNR
/// definition: Q(sqrt(Es/N0)).
double qpsk_ber_theory(double snr_db) noexcept;

}  // namespace pilotshift
