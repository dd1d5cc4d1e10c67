#include "pilotshift/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pilotshift/error.hpp"
#include "pilotshift/experiments.hpp"

namespace pilotshift {

namespace {

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& command, const ExperimentConfig& config)
        : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw IoError(path, "cannot open for writing");
        out_ << "# pilotshift " << command << ' ' << config.manifest() << '\n';
    }

    template <class... Cells>
    void row(const Cells&... cells) {
        bool first = true;
        ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
        out_ << '\n';
    }

    void finish() {
        out_.flush();
        if (!out_) throw IoError(path_, "write failed");
    }

private:
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(const char* s) { return s; }
    static std::string cell(double v) { return format_number(v); }
    template <class Int>
        requires std::is_integral_v<Int>
    static std::string cell(Int v) {
        return std::to_string(v);
    }

    std::string path_;
    std::ofstream out_;
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) return "nan";
    return {buf.data(), end};
}

void write_csv(const CcdfResult& result, const std::string& path) {
    CsvWriter w(path, "ccdf", result.config);
    w.row("threshold_db", "ccdf_baseline", "ccdf_proposed");
    for (const auto& p : result.curve) w.row(p.threshold_db, p.baseline, p.proposed);
    w.finish();
}

void write_csv(const PowerSweepResult& result, const std::string& path) {
    CsvWriter w(path, "power-sweep", result.config);
    w.row("pilot_power", "threshold_db", "ccdf");
    for (const auto& c : result.curves) {
        for (std::size_t i = 0; i < result.grid.size(); ++i) w.row(c.pilot_power, result.grid[i], c.ccdf[i]);
    }
    w.finish();
}

void write_csv(const DetectionErrorResult& result, const std::string& path) {
    CsvWriter w(path, "detect-error", result.config);
    w.row("snr_db", "n_s", "r_spacing", "error_pct", "frames");
    for (const auto& r : result.rows) w.row(r.snr_db, r.n_s, r.spacing, r.error_pct(), r.frames);
    w.finish();
}

void write_csv(const SurfaceResult& result, const std::string& path) {
    CsvWriter w(path, "detect-error-surface", result.config);
    w.row("gamma", "pilot_power", "error_pct", "frames");
    for (const auto& r : result.rows) w.row(r.gamma, r.pilot_power, r.error_pct(), r.frames);
    w.finish();
}

void write_csv(const BerResult& result, const std::string& path) {
    CsvWriter w(path, "ber", result.config);
    w.row("snr_db", "ber_known", "ber_detected", "bits");
    for (const auto& r : result.rows) w.row(r.snr_db, r.ber_known(), r.ber_detected(), r.bits);
    w.finish();
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");
    CsvTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '#') {
            table.comments.push_back(line.substr(1));
        } else if (table.header.empty()) {
            table.header = split(line);
        } else if (!line.empty()) {
            table.rows.push_back(split(line));
        }
    }
    return table;
}

}  // namespace pilotshift
