#include "osculant/tracker.hpp"

#include <algorithm>
#include <cmath>

namespace osculant {

void TrackerConfig::validate() const {
    if (!(0.0 < min_step && min_step <= initial_step && initial_step <= max_step &&
          max_step < 1.0))
        throw std::invalid_argument("step sizes must satisfy 0 < min <= initial <= max < 1");
    if (!(newton_tol > 0.0)) throw std::invalid_argument("newton tolerance must be positive");
    if (max_newton_iters < 1 || max_steps < 1 || endpoint_refine_iters < 0)
        throw std::invalid_argument("iteration limits must be positive");
}

Complex gamma_from_seed(uint64_t seed) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    double u = static_cast<double>(z >> 11) * 0x1.0p-53;
    return std::polar(1.0, 2.0 * std::acos(-1.0) * u);
}

std::string to_string(PathStatus s) {
    switch (s) {
        case PathStatus::converged: return "converged";
        case PathStatus::step_underflow: return "step_underflow";
        case PathStatus::diverged: return "diverged";
        case PathStatus::max_steps_exceeded: return "max_steps_exceeded";
    }
    return "unknown";
}

namespace {

constexpr double kDivergenceRadius = 1e8;

std::vector<Complex> flat_add_scaled(const std::vector<Complex>& a, double s,
                                     const std::vector<Complex>& b) {
    std::vector<Complex> r = a;
    for (size_t q = 0; q < r.size(); ++q) r[q] += s * b[q];
    return r;
}

double flat_norm(const std::vector<Complex>& a) {
    double m = 0.0;
    for (const Complex& v : a) m = std::max(m, std::abs(v));
    return m;
}

struct NewtonOutcome {
    bool converged = false;
    int iters = 0;
    double correction = 0.0;  // max-norm of the total Newton motion
};

// Newton on the fixed-parameter square system. Mutates p toward a solution.
// A corrector that travels beyond travel_cap has left the predictor's basin
// (near-singular stretch or a close sibling branch) and is rejected early.
NewtonOutcome newton_correct(const SparseHypersurface& f, AlphaPoint& p, double tol,
                             int max_iters, double travel_cap) {
    double moved = 0.0;
    for (int it = 0; it <= max_iters; ++it) {
        Residual r = evaluate(f, p);
        if (r.max_norm() <= tol) return {true, it, moved};
        if (it == max_iters) break;
        ComplexLU lu(jacobian(f, p));
        if (lu.singular()) return {false, it, moved};
        std::vector<Complex> rhs = r.full();
        for (auto& v : rhs) v = -v;
        std::vector<Complex> delta = lu.solve(rhs);
        moved += flat_norm(delta);
        if (moved > travel_cap) return {false, it, moved};
        std::vector<Complex> flat = p.flatten();
        for (size_t q = 0; q < flat.size(); ++q) flat[q] += delta[q];
        p = AlphaPoint::unflatten(p.d, flat);
    }
    return {false, max_iters, moved};
}

// The coefficient segment is traversed as s = ramp(tau) with a quintic
// smoothstep, whose zero velocity at both ends flattens the boundary layers
// that targets with large residual scales create near s = 0 and s = 1
// (the path geometry and endpoints are unchanged, only the timing).
double ramp(double t) {
    double s = t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
    return std::clamp(s, 0.0, 1.0);
}
double ramp_deriv(double t) {
    double u = t * (1.0 - t);
    return 30.0 * u * u;
}

// Davidenko right-hand side dalpha/dtau = -J^{-1} ramp'(tau) dds_h(alpha).
// Returns false when the Jacobian is singular at the sample point.
bool davidenko_rhs(const HomotopyProblem& hp, const SparseHypersurface& dds,
                   const Multidegree& d, const std::vector<Complex>& flat, double tau,
                   std::vector<Complex>& out) {
    AlphaPoint p = AlphaPoint::unflatten(d, flat);
    ComplexLU lu(jacobian(homotopy_coeffs(hp, ramp(tau)), p));
    if (lu.singular()) return false;
    std::vector<Complex> rhs = evaluate(dds, p).full();
    rhs.back() = Complex(0.0);  // normalization row does not move with s
    const double scale = ramp_deriv(tau);
    for (auto& v : rhs) v = -(scale * v);
    out = lu.solve(rhs);
    return true;
}

}  // namespace

PathResult track_path(const HomotopyProblem& hp, const AlphaPoint& start,
                      const TrackerConfig& cfg, const std::optional<Necklace>& source) {
    cfg.validate();
    if (evaluate(homotopy_coeffs(hp, 0.0), start).max_norm() > cfg.newton_tol)
        throw std::invalid_argument("start point does not satisfy the s = 0 system");

    PathResult res{PathStatus::max_steps_exceeded, start, source, 0,
                   std::numeric_limits<double>::infinity()};

    // The residual is linear in the coefficients, so dresidual/ds is the
    // h-vector of (target - gamma*start) with a zero normalization entry.
    const SparseHypersurface dds =
        combine_linear(Complex(1.0), hp.target, -hp.gamma, hp.start);

    AlphaPoint cur = start;
    double tau = 0.0;
    double step = cfg.initial_step;
    int easy_streak = 0;

    while (tau < 1.0) {
        if (res.steps_taken >= cfg.max_steps) {
            res.endpoint = cur;
            res.status = PathStatus::max_steps_exceeded;
            return res;
        }
        // Snap the final step onto tau = 1 (s = 1) exactly.
        const double tau2 = (1.0 - tau <= step) ? 1.0 : tau + step;
        const double dt = tau2 - tau;

        // RK4 predictor on the Davidenko field.
        const std::vector<Complex> flat = cur.flatten();
        std::vector<Complex> k1, k2, k3, k4;
        bool predicted =
            davidenko_rhs(hp, dds, cur.d, flat, tau, k1) &&
            davidenko_rhs(hp, dds, cur.d, flat_add_scaled(flat, dt / 2, k1), tau + dt / 2, k2) &&
            davidenko_rhs(hp, dds, cur.d, flat_add_scaled(flat, dt / 2, k2), tau + dt / 2, k3) &&
            davidenko_rhs(hp, dds, cur.d, flat_add_scaled(flat, dt, k3), tau2, k4);

        AlphaPoint cand = cur;
        if (predicted) {
            std::vector<Complex> next = flat;
            for (size_t q = 0; q < next.size(); ++q)
                next[q] += dt / 6.0 * (k1[q] + 2.0 * k2[q] + 2.0 * k3[q] + k4[q]);
            cand = AlphaPoint::unflatten(cur.d, next);
        }

        NewtonOutcome nw{false, 0, 0.0};
        if (predicted) {
            const double travel_cap = 0.03 * (1.0 + cur.max_abs());
            nw = newton_correct(homotopy_coeffs(hp, ramp(tau2)), cand, cfg.newton_tol,
                                cfg.max_newton_iters, travel_cap);
        }

        if (nw.converged) {
            if (cand.max_abs() > kDivergenceRadius) {
                res.endpoint = cand;
                res.status = PathStatus::diverged;
                return res;
            }
            cur = cand;
            tau = tau2;
            res.steps_taken++;
            if (nw.iters <= 2) {
                if (++easy_streak >= 2) {
                    step = std::min(step * 2.0, cfg.max_step);
                    easy_streak = 0;
                }
            } else {
                easy_streak = 0;
            }
        } else {
            step *= 0.5;
            easy_streak = 0;
            if (step < cfg.min_step) {
                res.endpoint = cur;
                res.status = PathStatus::step_underflow;
                return res;
            }
        }
    }

    // Endpoint polish: plain Newton against the target (gamma is gone at s=1),
    // driven to the noise floor so downstream classification has headroom.
    AlphaPoint best = cur;
    double best_res = evaluate(hp.target, best).max_norm();
    AlphaPoint work = cur;
    for (int it = 0; it < cfg.endpoint_refine_iters; ++it) {
        if (best_res <= 1e-15) break;
        ComplexLU lu(jacobian(hp.target, work));
        if (lu.singular()) break;
        Residual r = evaluate(hp.target, work);
        std::vector<Complex> rhs = r.full();
        for (auto& v : rhs) v = -v;
        std::vector<Complex> delta = lu.solve(rhs);
        std::vector<Complex> flat = work.flatten();
        for (size_t q = 0; q < flat.size(); ++q) flat[q] += delta[q];
        work = AlphaPoint::unflatten(work.d, flat);
        double rn = evaluate(hp.target, work).max_norm();
        if (!(rn < best_res)) break;
        best = work;
        best_res = rn;
    }

    res.endpoint = best;
    res.final_residual = best_res;
    res.status = best_res <= cfg.newton_tol ? PathStatus::converged : PathStatus::step_underflow;
    return res;
}

std::vector<PathResult> track_all(const HomotopyProblem& hp, const StartSet& ss,
                                  const TrackerConfig& cfg) {
    if (ss.d != hp.d)
        throw std::invalid_argument("start set multidegree does not match homotopy problem");
    std::vector<PathResult> results;
    results.reserve(ss.points.size());
    for (const auto& [nk, p] : ss.points) results.push_back(track_path(hp, p, cfg, nk));
    return results;
}

}  // namespace osculant
