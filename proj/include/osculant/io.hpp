#pragma once

#include <string>

#include "osculant/experiment.hpp"

namespace osculant {

inline constexpr const char* kToolName = "osculant";
inline constexpr const char* kToolVersion = "0.1.0";

/// Parse {"n": 2, "terms": [{"exp": [1,0], "re": -0.5, "im": 0.0}, ...]}.
SparseHypersurface hypersurface_from_json(const std::string& text);
SparseHypersurface load_hypersurface(const std::string& path);
std::string hypersurface_to_json(const SparseHypersurface& f);

/// Reproducibility manifest embedded in every output file.
struct RunManifest {
    Multidegree d;
    std::string target_source;  // "file:<path>" or "random:<seed>"
    TrackerConfig tracker;
    Complex gamma;
    std::string timestamp;

    static RunManifest make(const Multidegree& d, const std::string& target_source,
                            const TrackerConfig& cfg);
};

std::string start_set_to_json(const StartSet& ss);

std::string solve_outcome_to_json(const SolveOutcome& out, const RunManifest& manifest);

/// CSV with header row,count,anomalies: one line per histogram row and a
/// final total line carrying the anomalous-trial count.
std::string experiment_to_csv(const ExperimentResult& res);

std::string experiment_to_json(const ExperimentResult& res, const RunManifest& manifest);

void write_file(const std::string& path, const std::string& content);

}  // namespace osculant
