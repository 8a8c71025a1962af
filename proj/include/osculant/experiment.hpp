#pragma once

#include <cstdint>
#include <vector>

#include "osculant/osculants.hpp"
#include "osculant/tracker.hpp"

namespace osculant {

/// splitmix64: tiny deterministic generator so experiment streams reproduce
/// across platforms and standard libraries.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
};

/// Random real target for the experiments: dense support of total degree
/// 1..|d|-1 (higher monomials cannot affect the residual), coefficients
/// uniform on [-1, 1], with a nonzero linear part enforced by resampling.
SparseHypersurface random_real_target(const Multidegree& d, uint64_t seed);

/// Full pipeline outcome for one target.
struct SolveOutcome {
    std::vector<PathResult> paths;
    std::vector<OsculantRecord> records;  // normalized forms of converged paths
    DedupeResult dedup;
    int real_count = 0;        // among deduped records
    int failed_paths = 0;
    int degenerate_normalizations = 0;
    int retries = 0;                // extra homotopy runs that were needed
    TrackerConfig config_used;      // config of the accepted run
};

/// start set -> track_all -> coefficient forms -> dedupe -> real counts.
/// A run with path failures, collisions, or a wrong osculant count is retried
/// with a fresh gamma and smaller steps (same endpoints, different homotopy
/// geometry) before being reported as failed.
SolveOutcome solve_osculants(const SparseHypersurface& target, const Multidegree& d,
                             const TrackerConfig& cfg);

struct TrialRecord {
    uint64_t trial_seed = 0;
    int real_count = -1;   // -1 when the trial failed
    bool failed = false;   // any path failure or degenerate normalization
    bool parity_ok = true;
};

struct ExperimentResult {
    std::vector<TrialRecord> trials;
    ExperimentTally tally;       // over successful trials
    long long failed_trials = 0;
};

/// T independent random-target trials; trial t draws its target from a seed
/// derived from (seed, t), so any parallel schedule yields the same results.
ExperimentResult run_experiment(const Multidegree& d, int trials, uint64_t seed,
                                const TrackerConfig& cfg, int threads = 1);

}  // namespace osculant
