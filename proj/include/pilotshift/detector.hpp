#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pilotshift/pilot_grid.hpp"

namespace pilotshift {

/// How a residue class is scored when choosing between candidate rows.
enum class ClassMetric {
    magnitude,  // sum of |Y|
    power,      // sum of |Y|^2
};

/// Candidate threshold policy. Detection starts at `gamma`; while fewer than
/// N_p bins clear gamma*sqrt(P), gamma drops by `gamma_step` down to
/// `gamma_min`. When `soft_gamma` is false only `gamma` is tried.
struct DetectionConfig {
    double gamma = 0.8;
    double gamma_step = 0.05;
    double gamma_min = 0.3;
    bool soft_gamma = true;
    ClassMetric metric = ClassMetric::magnitude;

    void validate() const;
};

struct CandidateSet {
    std::vector<int> q;  // ascending 1-based bins with |Y| > gamma*sqrt(P)
    double gamma_used = 0.0;
};

struct DetectionResult {
    std::vector<int> positions;  // ascending 1-based pilot bins
    int offset = 1;              // detected r_o
    double alpha = 0.0;          // score of the winning class
    double gamma_used = 0.0;
    bool fallback = false;       // true when the gamma floor was reached

    bool operator==(const DetectionResult&) const = default;
};

/// Row-major M x (N_p - 1) integer matrix.
struct IndexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> values;

    int at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    std::span<const int> row(std::size_t r) const { return {values.data() + r * cols, cols}; }
};

CandidateSet candidate_locations(const FreqFrame& received, double pilot_power, double gamma);

/// Distances {R, 2R, ..., (N_p - 1) R} from a pilot to the others.
std::vector<int> distance_set(const PilotGeometry& geometry);

/// D_ij = wrap(q_i + s_j).
IndexMatrix build_candidate_matrix(std::span<const int> q, std::span<const int> distances, int n_s);

/// c_i = number of entries of row i that are themselves in q.
std::vector<int> count_hits(const IndexMatrix& d, std::span<const int> q);

/// The N_p candidates with the largest hit counts. Ties go to the larger |Y|,
/// then the smaller index. Throws InputError when fewer than N_p candidates.
std::vector<int> initial_estimates(std::span<const int> q, std::span<const int> counts,
                                   const FreqFrame& received, int n_p);

/// Expands each estimate to its full residue class and returns the class with
/// the largest score (smallest r_o on ties).
DetectionResult refine(std::span<const int> estimates, const PilotGeometry& geometry,
                       const FreqFrame& received, ClassMetric metric = ClassMetric::magnitude);

/// Scores every one of the R classes directly. This is the soft-gamma floor
/// fallback and the brute-force oracle.
DetectionResult best_residue_class(const PilotGeometry& geometry, const FreqFrame& received,
                                   ClassMetric metric = ClassMetric::magnitude);

/// One pass of the threshold pipeline at a fixed gamma; empty when fewer than
/// N_p candidates clear the threshold.
std::optional<DetectionResult> detect_at_gamma(const FreqFrame& received,
                                               const PilotGeometry& geometry, double gamma,
                                               ClassMetric metric = ClassMetric::magnitude);

/// Blind pilot detection with soft gamma and brute-force floor fallback.
/// With soft_gamma off and too few candidates, returns an empty optional.
std::optional<DetectionResult> try_detect(const FreqFrame& received, const PilotGeometry& geometry,
                                          const DetectionConfig& config);

/// Always produces an answer (soft gamma plus fallback).
DetectionResult detect(const FreqFrame& received, const PilotGeometry& geometry,
                       const DetectionConfig& config = {});

}  // namespace pilotshift
