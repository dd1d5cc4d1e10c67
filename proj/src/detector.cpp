#include "pilotshift/detector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pilotshift/error.hpp"

namespace pilotshift {

namespace {

double bin_score(const FreqFrame& received, int position, ClassMetric metric) {
    const Complex& y = received.symbols[static_cast<std::size_t>(position - 1)];
    return metric == ClassMetric::magnitude ? std::abs(y) : std::norm(y);
}

std::vector<int> residue_class(int anchor, const PilotGeometry& geometry) {
    const int spacing = geometry.spacing();
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(geometry.n_p));
    for (int n = 1; n <= geometry.n_p; ++n) row.push_back(wrap_index(anchor + n * spacing, geometry.n_s));
    return row;
}

// k-th rung of the soft-gamma ladder
double ladder_gamma(const DetectionConfig& config, int k) {
    return config.gamma - static_cast<double>(k) * config.gamma_step;
}

}  // namespace

void DetectionConfig::validate() const {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("gamma must lie in (0, 1]");
    if (!(gamma_step > 0.0)) throw ConfigError("gamma step must be positive");
    if (!(gamma_min >= 0.0 && gamma_min <= gamma)) {
        throw ConfigError("gamma floor must lie in [0, gamma]");
    }
}

CandidateSet candidate_locations(const FreqFrame& received, double pilot_power, double gamma) {
    CandidateSet out;
    out.gamma_used = gamma;
    const double threshold = gamma * std::sqrt(pilot_power);
    for (std::size_t i = 0; i < received.size(); ++i) {
        if (std::abs(received.symbols[i]) - threshold > 0.0) out.q.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

std::vector<int> distance_set(const PilotGeometry& geometry) {
    std::vector<int> out;
    for (int t = 1; t < geometry.n_p; ++t) out.push_back(t * geometry.spacing());
    return out;
}

IndexMatrix build_candidate_matrix(std::span<const int> q, std::span<const int> distances, int n_s) {
    IndexMatrix d{q.size(), distances.size(), {}};
    d.values.reserve(d.rows * d.cols);
    for (int qi : q) {
        for (int s : distances) d.values.push_back(wrap_index(qi + s, n_s));
    }
    return d;
}

std::vector<int> count_hits(const IndexMatrix& d, std::span<const int> q) {
    std::vector<int> counts(d.rows, 0);
    for (std::size_t r = 0; r < d.rows; ++r) {
        for (int v : d.row(r)) {
            if (std::find(q.begin(), q.end(), v) != q.end()) ++counts[r];
        }
    }
    return counts;
}

std::vector<int> initial_estimates(std::span<const int> q, std::span<const int> counts,
                                   const FreqFrame& received, int n_p) {
    if (q.size() != counts.size()) throw InputError("candidate and count vectors differ in length");
    if (n_p < 1 || q.size() < static_cast<std::size_t>(n_p)) {
        throw InputError("insufficient candidates: " + std::to_string(q.size()) + " < N_p = " +
                         std::to_string(n_p));
    }
    std::vector<std::size_t> order(q.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto magnitude = [&](std::size_t i) {
        return std::abs(received.symbols[static_cast<std::size_t>(q[i] - 1)]);
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        const double ma = magnitude(a);
        const double mb = magnitude(b);
        if (ma != mb) return ma > mb;
        return q[a] < q[b];
    });
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_p));
    for (int i = 0; i < n_p; ++i) out.push_back(q[order[static_cast<std::size_t>(i)]]);
    return out;
}

DetectionResult refine(std::span<const int> estimates, const PilotGeometry& geometry,
                       const FreqFrame& received, ClassMetric metric) {
    geometry.validate();
    if (estimates.empty()) throw InputError("refine needs at least one estimate");
    if (received.size() != static_cast<std::size_t>(geometry.n_s)) {
        throw InputError("received frame length does not match N_s");
    }
    DetectionResult best;
    bool have = false;
    for (int u : estimates) {
        std::vector<int> row = residue_class(u, geometry);
        double alpha = 0.0;
        for (int z : row) alpha += bin_score(received, z, metric);
        const int offset = residue_offset(u, geometry.spacing());
        if (!have || alpha > best.alpha || (alpha == best.alpha && offset < best.offset)) {
            std::sort(row.begin(), row.end());
            best.positions = std::move(row);
            best.offset = offset;
            best.alpha = alpha;
            have = true;
        }
    }
    return best;
}

DetectionResult best_residue_class(const PilotGeometry& geometry, const FreqFrame& received,
                                   ClassMetric metric) {
    std::vector<int> every_offset(static_cast<std::size_t>(geometry.spacing()));
    std::iota(every_offset.begin(), every_offset.end(), 1);
    return refine(every_offset, geometry, received, metric);
}

std::optional<DetectionResult> detect_at_gamma(const FreqFrame& received,
                                               const PilotGeometry& geometry, double gamma,
                                               ClassMetric metric) {
    const CandidateSet candidates = candidate_locations(received, geometry.power, gamma);
    if (candidates.q.size() < static_cast<std::size_t>(geometry.n_p)) return std::nullopt;
    const std::vector<int> distances = distance_set(geometry);
    const IndexMatrix d = build_candidate_matrix(candidates.q, distances, geometry.n_s);
    const std::vector<int> counts = count_hits(d, candidates.q);
    const std::vector<int> estimates =
        initial_estimates(candidates.q, counts, received, geometry.n_p);
    DetectionResult result = refine(estimates, geometry, received, metric);
    result.gamma_used = gamma;
    return result;
}

std::optional<DetectionResult> try_detect(const FreqFrame& received, const PilotGeometry& geometry,
                                          const DetectionConfig& config) {
    geometry.validate();
    config.validate();
    if (received.size() != static_cast<std::size_t>(geometry.n_s)) {
        throw InputError("received frame length does not match N_s");
    }
    if (!config.soft_gamma) return detect_at_gamma(received, geometry, config.gamma, config.metric);

    constexpr double slack = 1e-12;
    for (int k = 0;; ++k) {
        const double gamma = ladder_gamma(config, k);
        if (gamma < config.gamma_min - slack) break;
        if (auto result = detect_at_gamma(received, geometry, gamma, config.metric)) return result;
    }
    DetectionResult result = best_residue_class(geometry, received, config.metric);
    result.gamma_used = config.gamma_min;
    result.fallback = true;
    return result;
}

DetectionResult detect(const FreqFrame& received, const PilotGeometry& geometry,
                       const DetectionConfig& config) {
    DetectionConfig soft = config;
    soft.soft_gamma = true;
    return *try_detect(received, geometry, soft);
}

}  // namespace pilotshift
