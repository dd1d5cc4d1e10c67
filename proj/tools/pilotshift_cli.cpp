// pilotshift: Monte Carlo runs of pilot-shifting PAPR reduction and blind
// pilot detection. Every run writes one CSV.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pilotshift/csv.hpp"
#include "pilotshift/error.hpp"
#include "pilotshift/experiments.hpp"

namespace {

struct Options {
    int ns = 64;
    int np = 4;
    std::vector<double> pilot_power{9.0};
    int oversample = 8;
    std::vector<double> snr{0.0, 3.0, 6.0, 9.0};
    std::size_t frames = 100000;
    std::uint64_t seed = 1;
    std::vector<double> gamma{0.8};
    double gamma_step = 0.05;
    double gamma_min = 0.3;
    bool fixed_gamma = false;
    std::string metric = "magnitude";
    double early_exit_db = 0.0;
    double ccdf_min = 4.0;
    double ccdf_max = 12.0;
    double ccdf_step = 0.1;
    bool surface = false;
    bool serial = false;
    std::string out;
};

pilotshift::ExperimentConfig to_config(const Options& o, const CLI::App& app, bool power_list_ok,
                                       bool gamma_list_ok) {
    using namespace pilotshift;
    if (!power_list_ok && o.pilot_power.size() != 1) {
        throw ConfigError("--pilot-power takes a single value for this command");
    }
    if (!gamma_list_ok && o.gamma.size() != 1) {
        throw ConfigError("--gamma takes a single value for this command");
    }
    ExperimentConfig c;
    c.geometry = {o.ns, o.np, o.pilot_power.front()};
    c.oversample = o.oversample;
    c.snr_db = o.snr;
    c.frames = o.frames;
    c.seed = o.seed;
    c.detection.gamma = o.gamma.front();
    c.detection.gamma_step = o.gamma_step;
    c.detection.gamma_min = o.gamma_min;
    c.detection.soft_gamma = !o.fixed_gamma;
    c.detection.metric = o.metric == "power" ? ClassMetric::power : ClassMetric::magnitude;
    if (app.count("--early-exit-db") > 0) c.early_exit_db = o.early_exit_db;
    c.ccdf_min_db = o.ccdf_min;
    c.ccdf_max_db = o.ccdf_max;
    c.ccdf_step_db = o.ccdf_step;
    c.execution = o.serial ? Execution::serial : Execution::parallel;
    return c;
}

std::string output_path(const Options& o, const std::string& fallback) {
    return o.out.empty() ? fallback : o.out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace pilotshift;
    CLI::App app{"Pilot-shifting PAPR reduction and blind pilot detection experiments"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key = value file; command-line flags override it");

    Options o;
    app.add_option("--ns", o.ns, "Subcarriers N_s (power of two)");
    app.add_option("--np", o.np, "Pilots N_p (must divide N_s)");
    app.add_option("--pilot-power", o.pilot_power, "Pilot power P (list for power-sweep / surface)")
        ->delimiter(',');
    app.add_option("--oversample", o.oversample, "Oversampling factor L for PAPR and shift selection");
    app.add_option("--snr", o.snr, "SNR points in dB (repeatable or comma list)")->delimiter(',');
    app.add_option("--frames", o.frames, "OFDM symbols per experiment cell");
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--gamma", o.gamma, "Initial detection threshold fraction (list for --surface)")
        ->delimiter(',');
    app.add_option("--gamma-step", o.gamma_step, "Soft-gamma decrement");
    app.add_option("--gamma-min", o.gamma_min, "Soft-gamma floor");
    app.add_flag("--fixed-gamma", o.fixed_gamma, "Disable soft gamma (too few candidates counts as an error)");
    app.add_option("--metric", o.metric, "Class score: magnitude (sum |Y|) or power (sum |Y|^2)")
        ->check(CLI::IsMember({"magnitude", "power"}));
    app.add_option("--early-exit-db", o.early_exit_db, "Stop the shift search below this PAPR");
    app.add_option("--ccdf-min", o.ccdf_min, "CCDF grid start (dB)");
    app.add_option("--ccdf-max", o.ccdf_max, "CCDF grid end (dB)");
    app.add_option("--ccdf-step", o.ccdf_step, "CCDF grid step (dB)");
    app.add_flag("--serial", o.serial, "Use the serial reference trial loop");
    app.add_option("--out", o.out, "Output CSV path");

    auto* ccdf_cmd = app.add_subcommand("ccdf", "PAPR CCDF, fixed r_o = 1 vs pilot shifting")->fallthrough();
    auto* sweep_cmd = app.add_subcommand("power-sweep", "PAPR CCDF of r_o = 1 OFDM per pilot power")->fallthrough();
    auto* detect_cmd = app.add_subcommand("detect-error", "Blind detection block-error rate per SNR")->fallthrough();
    detect_cmd->add_flag("--surface", o.surface,
                         "Fixed-gamma error grid over --gamma x --pilot-power at the first --snr");
    auto* ber_cmd = app.add_subcommand("ber", "BER with known vs detected pilot positions")->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        std::string path;
        if (ccdf_cmd->parsed()) {
            path = output_path(o, "ccdf.csv");
            write_csv(run_ccdf(to_config(o, app, false, false)), path);
        } else if (sweep_cmd->parsed()) {
            path = output_path(o, "power_sweep.csv");
            const auto config = to_config(o, app, true, false);
            write_csv(run_pilot_power_sweep(config, o.pilot_power), path);
        } else if (detect_cmd->parsed() && o.surface) {
            path = output_path(o, "detect_surface.csv");
            const auto config = to_config(o, app, true, true);
            write_csv(run_detection_surface(config, o.gamma, o.pilot_power), path);
        } else if (detect_cmd->parsed()) {
            path = output_path(o, "detect_error.csv");
            write_csv(run_detection_error(to_config(o, app, false, false)), path);
        } else if (ber_cmd->parsed()) {
            path = output_path(o, "ber.csv");
            write_csv(run_ber(to_config(o, app, false, false)), path);
        }
        std::cout << "wrote " << path << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
