#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "osculant/start.hpp"
#include "osculant/system.hpp"

namespace osculant {

struct TrackerConfig {
    double initial_step = 0.05;
    double min_step = 1e-7;
    double max_step = 0.1;
    double newton_tol = 1e-10;
    int max_newton_iters = 5;
    int max_steps = 10000;
    uint64_t gamma_seed = 1;  // derives the unit-modulus gamma deterministically
    int endpoint_refine_iters = 20;

    void validate() const;
};

/// Deterministic unit-modulus gamma from a seed.
Complex gamma_from_seed(uint64_t seed);

enum class PathStatus { converged, step_underflow, diverged, max_steps_exceeded };

/// Serialized status names are part of the output format.
std::string to_string(PathStatus s);

struct PathResult {
    PathStatus status = PathStatus::max_steps_exceeded;
    AlphaPoint endpoint;
    std::optional<Necklace> source;
    int steps_taken = 0;
    double final_residual = std::numeric_limits<double>::infinity();
};

/// Predictor-corrector march of the parameter s from 0 to 1, traversed with
/// a smoothstep timing so stiff targets do not create boundary layers at the
/// ends: an RK4 step on the Davidenko field J dalpha = -(dresidual/ds) ds,
/// then Newton correction at fixed s with a travel cap that rejects basin
/// jumps. The step doubles after two consecutive easy corrections (<= 2
/// Newton iterations) and halves when correction fails; the endpoint is
/// polished by plain Newton against the target.
PathResult track_path(const HomotopyProblem& hp, const AlphaPoint& start,
                      const TrackerConfig& cfg,
                      const std::optional<Necklace>& source = std::nullopt);

/// One result per start point, in start order. Paths are independent;
/// failures are reported per path and never abort the batch.
std::vector<PathResult> track_all(const HomotopyProblem& hp, const StartSet& ss,
                                  const TrackerConfig& cfg);

}  // namespace osculant
