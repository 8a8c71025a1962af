#pragma once

#include <map>
#include <utility>
#include <vector>

#include "osculant/counting.hpp"
#include "osculant/necklace.hpp"
#include "osculant/system.hpp"

namespace osculant {

/// The |d|-th roots of -1 in the fixed order zeta_b = exp(i pi (2b+1) / N),
/// b = 0..N-1.
std::vector<Complex> roots_of_minus_one(int N);

/// Exact start solution for a primitive necklace: alpha_{i,j} = -1/zeta_b at
/// the positions b of color i, so that prod(alpha t + 1) = 1 + t^|d| and
/// prod alpha = 1. Rejects non-primitive necklaces (those parametrize a
/// d/k-osculant instead).
AlphaPoint start_point(const Necklace& nk);

/// One verified start solution per primitive d-necklace.
struct StartSet {
    Multidegree d;
    std::vector<std::pair<Necklace, AlphaPoint>> points;
};

/// Builds and verifies the start set: count equals count_primitive(d), each
/// residual against the start hypersurface is <= tol, and each Jacobian is
/// numerically nonsingular. A verification failure throws (it indicates a
/// bug, not bad input).
StartSet build_start_set(const Multidegree& d, double tol = 1e-12);

/// Diagnostic census of all C(|d|,d) color-respecting root assignments:
/// each is a solution of the start system, and rotation orbits partition
/// them into necklace classes of size |d|/k.
struct OrbitCensus {
    long long total_words = 0;
    std::map<int, long long> orbits_by_k;  // fold k -> number of orbits (each of size |d|/k)
    bool residuals_ok = false;             // every assignment solves the start system
    bool counts_match = false;             // orbits_by_k[k] == count_primitive(d/k) for all k
};

OrbitCensus orbit_representatives_check(const Multidegree& d, double tol = 1e-12);

}  // namespace osculant
