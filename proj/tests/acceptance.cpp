// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pilotshift/channel.hpp"
#include "pilotshift/csv.hpp"
#include "pilotshift/detector.hpp"
#include "pilotshift/experiments.hpp"
#include "pilotshift/modem.hpp"
#include "pilotshift/rng.hpp"
#include "pilotshift/transmitter.hpp"

using namespace pilotshift;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string(ok ? "" : "MISS ") + what;
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double papr_gap(const CcdfResult& r, double probability) {
    std::vector<double> baseline;
    std::vector<double> proposed;
    for (const auto& t : r.trials) {
        baseline.push_back(t.baseline_db);
        proposed.push_back(t.proposed_db);
    }
    return tail_threshold(baseline, probability) - tail_threshold(proposed, probability);
}

ExperimentConfig base_config(PilotGeometry g, std::size_t frames, std::uint64_t seed) {
    ExperimentConfig c;
    c.geometry = g;
    c.frames = frames;
    c.seed = seed;
    c.oversample = 8;
    return c;
}

// 1 and 2 share the N_p = 4 run
CcdfResult ccdf_np4() {
    static const CcdfResult r = run_ccdf(base_config({64, 4, 9.0}, 100000, 2024));
    return r;
}

Outcome papr_reduction() {
    const auto r = ccdf_np4();
    const double g2 = papr_gap(r, 1e-2);
    const double g3 = papr_gap(r, 1e-3);
    Outcome o;
    o.require(std::abs(g2 - 2.0) <= 0.4, "gap@1e-2 = " + fmt("%.3f", g2) + " dB (2.0 +/- 0.4)");
    o.require(std::abs(g3 - 1.5) <= 0.4, "gap@1e-3 = " + fmt("%.3f", g3) + " dB (1.5 +/- 0.4)");
    return o;
}

Outcome pilot_count_ordering() {
    const double g4 = papr_gap(ccdf_np4(), 1e-2);
    const double g8 = papr_gap(run_ccdf(base_config({64, 8, 9.0}, 100000, 2025)), 1e-2);
    Outcome o;
    o.require(g4 - g8 >= 0.3, "gap@1e-2 N_p=4: " + fmt("%.3f", g4) + " dB, N_p=8: " + fmt("%.3f", g8) +
                                  " dB, difference >= 0.3");
    return o;
}

Outcome detection_error() {
    Outcome o;
    const std::vector<double> snrs{0.0, 3.0, 6.0, 9.0};
    auto run_cell = [&](PilotGeometry g, std::uint64_t seed) {
        auto c = base_config(g, 10000, seed);
        c.snr_db = snrs;
        return run_detection_error(c).rows;
    };
    auto monotone = [&](const std::vector<DetectionErrorRow>& rows, const std::string& name) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double n = static_cast<double>(rows[i].frames);
            const double p0 = rows[i - 1].error_pct() / 100.0;
            const double p1 = rows[i].error_pct() / 100.0;
            const double se = std::sqrt(p0 * (1 - p0) / n + p1 * (1 - p1) / n);
            o.require(p1 <= p0 + 3.0 * se, name + " monotone " + fmt("%g", rows[i - 1].snr_db) + "->" +
                                               fmt("%g", rows[i].snr_db) + " dB");
        }
    };
    const auto r16 = run_cell({256, 16, 9.0}, 31);
    const auto r8 = run_cell({128, 16, 9.0}, 32);
    auto pct = [](const DetectionErrorRow& r) { return fmt("%.2f", r.error_pct()) + "%"; };
    o.require(r16[0].error_pct() <= 8.0, "Ns=256,R=16 @0dB " + pct(r16[0]) + " <= 8%");
    o.require(r16[2].error_pct() <= 0.5, "@6dB " + pct(r16[2]) + " <= 0.5%");
    o.require(r16[3].error_pct() <= 0.05, "@9dB " + pct(r16[3]) + " ~ 0 (<= 0.05%)");
    o.require(r8[0].error_pct() >= 5.0 && r8[0].error_pct() <= 20.0,
              "Ns=128,R=8 @0dB " + pct(r8[0]) + " in [5%, 20%]");
    monotone(r16, "Ns=256,R=16");
    monotone(r8, "Ns=128,R=8");
    return o;
}

Outcome noise_free_exactness() {
    Outcome o;
    std::size_t total_errors = 0;
    std::size_t cells = 0;
    for (int n_s : {64, 128, 256}) {
        for (int n_p : {4, 8, 16}) {
            if (n_s % n_p != 0) continue;
            const PilotGeometry g{n_s, n_p, 9.0};
            std::size_t errors = 0;
            for (std::size_t t = 0; t < 1000; ++t) {
                const auto bits = random_bits(2 * static_cast<std::size_t>(g.data_count()),
                                              derive_seed(77, t, Stream::bits, static_cast<std::uint64_t>(n_s * 100 + n_p)));
                const auto search = minimize_papr(qpsk_map(bits), g, 8);
                const FreqFrame rx = fft(awgn(transmit(search, 1), ChannelConfig::noise_free()));
                errors += detect(rx, g).offset != search.best_offset ? 1 : 0;
            }
            ++cells;
            total_errors += errors;
            if (errors) o.require(false, "Ns=" + std::to_string(n_s) + ",Np=" + std::to_string(n_p) + " errors=" + std::to_string(errors));
        }
    }
    o.require(total_errors == 0, std::to_string(cells) + " cells x 1000 frames, " + std::to_string(total_errors) + " errors");
    return o;
}

Outcome oracle_equivalence() {
    const PilotGeometry g{256, 16, 9.0};
    std::size_t eligible = 0;
    std::size_t agree = 0;
    for (std::size_t t = 0; t < 10000; ++t) {
        const auto bits = random_bits(2 * static_cast<std::size_t>(g.data_count()), derive_seed(55, t, Stream::bits));
        const auto search = minimize_papr(qpsk_map(bits), g, 8);
        const double snr = (t % 2 == 0) ? 6.0 : 9.0;
        const FreqFrame rx = fft(awgn(transmit(search, 1), {snr, derive_seed(55, t, Stream::noise)}));
        const DetectionConfig cfg;
        if (candidate_locations(rx, g.power, cfg.gamma).q.size() < static_cast<std::size_t>(g.n_p)) continue;
        ++eligible;
        agree += detect(rx, g, cfg).offset == oracle::best_class(rx.symbols, g.spacing()) ? 1 : 0;
    }
    Outcome o;
    const double rate = eligible ? static_cast<double>(agree) / static_cast<double>(eligible) : 0.0;
    o.require(eligible > 0 && rate >= 0.999, "agreement " + fmt("%.4f", 100.0 * rate) + "% over " +
                                                 std::to_string(eligible) + " eligible frames (>= 99.9%)");
    return o;
}

Outcome ber() {
    Outcome o;
    const std::vector<double> snrs{0.0, 3.0, 6.0, 9.0};
    struct Cell {
        PilotGeometry g;
        bool baseline_check;
    };
    const std::vector<Cell> cells{{{64, 4, 9.0}, true},   {{128, 8, 9.0}, false},  {{256, 16, 9.0}, false},
                                  {{128, 16, 9.0}, false}, {{256, 32, 9.0}, false}};
    std::uint64_t seed = 60;
    for (const auto& cell : cells) {
        const std::size_t bits_per_frame = 2 * static_cast<std::size_t>(cell.g.data_count());
        auto c = base_config(cell.g, (200000 + bits_per_frame - 1) / bits_per_frame, seed++);
        c.snr_db = snrs;
        const auto rows = run_ber(c).rows;
        const std::string name = "Ns=" + std::to_string(cell.g.n_s) + ",R=" + std::to_string(cell.g.spacing());
        for (const auto& row : rows) {
            if (cell.baseline_check) {
                const double p = oracle::q_function(std::sqrt(std::pow(10.0, row.snr_db / 10.0)));
                const double se = std::sqrt(p * (1 - p) / static_cast<double>(row.bits));
                const bool ok = row.bits >= 100000 && std::abs(row.ber_known() - p) <= 3.0 * se;
                o.require(ok, name + " known BER@" + fmt("%g", row.snr_db) + "dB " + fmt("%.5f", row.ber_known()) +
                                  " vs " + fmt("%.5f", p));
            }
            const bool degradation_allowed = cell.g.spacing() == 8 && cell.g.n_s == 256 && row.snr_db <= 3.0;
            const bool ratio_required = cell.g.spacing() == 16 ? row.snr_db >= 3.0 : !degradation_allowed;
            const double ratio = row.ber_known() > 0 ? row.ber_detected() / row.ber_known() : 1.0;
            if (ratio_required && ratio > 1.1) {
                o.require(false, name + " BER ratio@" + fmt("%g", row.snr_db) + "dB " + fmt("%.3f", ratio));
            }
        }
    }
    o.require(true, "detected/known BER ratio <= 1.1 outside (Ns=256,R=8,SNR<=3)");
    return o;
}

Outcome numerical_core() {
    Outcome o;
    std::mt19937_64 rng(99);
    double worst_rt = 0.0;
    double worst_parseval = 0.0;
    for (std::size_t n = 1; n <= 4096; n *= 2) {
        const auto in = oracle::random_complex(n, rng);
        const TimeSignal x = ifft(FreqFrame{in});
        const FreqFrame back = fft(x);
        const TimeSignal again = ifft(fft(TimeSignal{in, 1}));
        double e_in = 0.0;
        double e_x = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            worst_rt = std::max({worst_rt, std::abs(back.symbols[i] - in[i]), std::abs(again.samples[i] - in[i])});
            e_in += std::norm(in[i]);
            e_x += std::norm(x.samples[i]);
        }
        worst_parseval = std::max(worst_parseval, std::abs(e_x - e_in) / e_in);
    }
    o.require(worst_rt <= 1e-9, "round trip max err " + fmt("%.2e", worst_rt));
    o.require(worst_parseval <= 1e-9, "Parseval rel err " + fmt("%.2e", worst_parseval));

    bool wrap_ok = true;
    for (int n_s : {8, 64, 256}) {
        for (int v = 1; v <= 2 * n_s; ++v) wrap_ok = wrap_ok && wrap_index(v, n_s) == (v - 1) % n_s + 1;
    }
    o.require(wrap_ok, "wrap_index exhaustive");

    bool oversampled_ok = true;
    for (int t = 0; t < 1000; ++t) {
        const FreqFrame f{oracle::random_qpsk(64, rng)};
        oversampled_ok = oversampled_ok && papr_db(oversampled_ifft(f, 8)) >= papr_db(ifft(f)) - 1e-12;
    }
    o.require(oversampled_ok, "oversampled PAPR >= Nyquist PAPR (1000 frames)");

    const double hand = papr_db(TimeSignal{{2.0, 0.0, 0.0, 0.0}, 1});
    o.require(std::abs(hand - 6.0206) <= 1e-4 && std::abs(hand - 10.0 * std::log10(4.0)) <= 1e-6,
              "PAPR([2,0,0,0]) = " + fmt("%.6f", hand) + " dB");
    return o;
}

std::string read_all(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome reproducibility() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    auto same = [&](const std::string& name, const std::function<void(const std::string&)>& produce) {
        const auto a = (dir / ("pilotshift_acc_a_" + name)).string();
        const auto b = (dir / ("pilotshift_acc_b_" + name)).string();
        produce(a);
        produce(b);
        o.require(read_all(a) == read_all(b) && !read_all(a).empty(), name + " byte-identical");
    };
    auto c = base_config({64, 4, 9.0}, 2000, 8);
    same("ccdf.csv", [&](const std::string& p) { write_csv(run_ccdf(c), p); });
    same("detect.csv", [&](const std::string& p) { write_csv(run_detection_error(c), p); });
    same("ber.csv", [&](const std::string& p) { write_csv(run_ber(c), p); });
    // serial reference loop must write the same file as the parallel loop
    same("ccdf_exec.csv", [&](const std::string& p) {
        c.execution = c.execution == Execution::parallel ? Execution::serial : Execution::parallel;
        write_csv(run_ccdf(c), p);
    });
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 PAPR reduction (N_s=64, N_p=4, P=9, L=8, 1e5 frames)", papr_reduction},
        {"2 N_p ordering (gap shrinks at N_p=8)", pilot_count_ordering},
        {"3 detection error, soft gamma (1e4 frames per cell)", detection_error},
        {"4 noise-free detection exactness", noise_free_exactness},
        {"5 oracle equivalence (SNR >= 6 dB, R=16)", oracle_equivalence},
        {"6 BER known vs detected", ber},
        {"7 numerical core properties", numerical_core},
        {"8 reproducibility", reproducibility},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const Outcome o = c.run();
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
