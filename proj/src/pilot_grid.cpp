#include "pilotshift/pilot_grid.hpp"

#include <cmath>
#include <string>

#include "pilotshift/error.hpp"

namespace pilotshift {

void PilotGeometry::validate() const {
    if (n_s < 1) throw ConfigError("N_s must be positive, got " + std::to_string(n_s));
    if (n_p < 1 || n_p > n_s) {
        throw ConfigError("N_p must lie in [1, N_s], got " + std::to_string(n_p));
    }
    if (n_s % n_p != 0) {
        throw ConfigError("N_p = " + std::to_string(n_p) + " does not divide N_s = " +
                          std::to_string(n_s));
    }
    if (!(power > 0.0) || !std::isfinite(power)) {
        throw ConfigError("pilot power must be positive and finite");
    }
}

void PilotLayout::validate() const {
    geometry.validate();
    if (offset < 1 || offset > geometry.spacing()) {
        throw ConfigError("pilot offset r_o = " + std::to_string(offset) + " outside [1, " +
                          std::to_string(geometry.spacing()) + "]");
    }
}

std::vector<int> pilot_positions(const PilotLayout& layout) {
    layout.validate();
    const int spacing = layout.geometry.spacing();
    std::vector<int> out(static_cast<std::size_t>(layout.geometry.n_p));
    for (int k = 0; k < layout.geometry.n_p; ++k) out[static_cast<std::size_t>(k)] = k * spacing + layout.offset;
    return out;
}

FreqFrame assemble_frame(std::span<const Complex> data, const PilotLayout& layout) {
    layout.validate();
    const auto& g = layout.geometry;
    if (static_cast<int>(data.size()) != g.data_count()) {
        throw InputError("expected " + std::to_string(g.data_count()) + " data symbols, got " +
                         std::to_string(data.size()));
    }
    const Complex pilot(std::sqrt(g.power), 0.0);
    const int spacing = g.spacing();
    FreqFrame frame{std::vector<Complex>(static_cast<std::size_t>(g.n_s))};
    std::size_t next = 0;
    for (int index = 1; index <= g.n_s; ++index) {
        const bool is_pilot = residue_offset(index, spacing) == layout.offset;
        frame.symbols[static_cast<std::size_t>(index - 1)] = is_pilot ? pilot : data[next++];
    }
    return frame;
}

DataSymbols disassemble_frame(const FreqFrame& frame, std::span<const int> positions) {
    const int n_s = static_cast<int>(frame.size());
    std::vector<bool> is_pilot(frame.size(), false);
    for (int p : positions) {
        if (p < 1 || p > n_s) {
            throw InputError("pilot position " + std::to_string(p) + " outside [1, " +
                             std::to_string(n_s) + "]");
        }
        if (is_pilot[static_cast<std::size_t>(p - 1)]) {
            throw InputError("duplicate pilot position " + std::to_string(p));
        }
        is_pilot[static_cast<std::size_t>(p - 1)] = true;
    }
    DataSymbols out;
    out.reserve(frame.size() - positions.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (!is_pilot[i]) out.push_back(frame.symbols[i]);
    }
    return out;
}

int wrap_index(int v, int n_s) {
    if (n_s < 1 || v < 1 || v > 2 * n_s) {
        throw InputError("wrap_index: " + std::to_string(v) + " outside [1, " +
                         std::to_string(2 * n_s) + "]");
    }
    const int m = v % (n_s + 1);
    return m < v ? m + 1 : v;
}

int residue_offset(int position, int spacing) noexcept { return (position - 1) % spacing + 1; }

}  // namespace pilotshift
