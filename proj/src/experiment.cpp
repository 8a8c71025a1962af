#include "osculant/experiment.hpp"

#include <atomic>
#include <thread>

namespace osculant {

namespace {

// Exponent vectors of total degree 1..maxdeg in n variables, lexicographic.
void dense_support(int n, int maxdeg, std::vector<int>& cur, int at, int used,
                   std::vector<std::vector<int>>& out) {
    if (at == n) {
        if (used >= 1) out.push_back(cur);
        return;
    }
    for (int e = 0; e <= maxdeg - used; ++e) {
        cur[static_cast<size_t>(at)] = e;
        dense_support(n, maxdeg, cur, at + 1, used + e, out);
    }
    cur[static_cast<size_t>(at)] = 0;
}

}  // namespace

SparseHypersurface random_real_target(const Multidegree& d, uint64_t seed) {
    const int n = d.size();
    const int maxdeg = std::max(1, d.total() - 1);
    std::vector<std::vector<int>> support;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    dense_support(n, maxdeg, cur, 0, 0, support);

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<HypersurfaceTerm> terms;
        terms.reserve(support.size());
        bool linear_nonzero = false;
        for (const auto& exp : support) {
            double c = rng.uniform(-1.0, 1.0);
            HypersurfaceTerm t{exp, Complex(c)};
            if (t.total_degree() == 1 && std::abs(c) > 1e-6) linear_nonzero = true;
            terms.push_back(std::move(t));
        }
        if (linear_nonzero) return SparseHypersurface(n, std::move(terms));
    }
    throw std::runtime_error("failed to sample a target with nonzero linear part");
}

namespace {

SolveOutcome run_pipeline_once(const SparseHypersurface& target, const StartSet& ss,
                               const Multidegree& d, const TrackerConfig& cfg) {
    SolveOutcome out;
    out.config_used = cfg;
    HomotopyProblem hp(target, tilde_hypersurface(d.size()), gamma_from_seed(cfg.gamma_seed), d);
    out.paths = track_all(hp, ss, cfg);

    for (const PathResult& pr : out.paths) {
        if (pr.status != PathStatus::converged) {
            out.failed_paths++;
            continue;
        }
        try {
            CoefficientForm cf = to_coefficient_form(pr.endpoint);
            bool re = is_real_osculant(cf);
            out.records.push_back(OsculantRecord{std::move(cf), re, pr.final_residual,
                                                 pr.source.value()});
        } catch (const DegenerateNormalization&) {
            out.degenerate_normalizations++;
        }
    }
    if (!out.records.empty()) {
        out.dedup = dedupe(out.records);
        for (const auto& r : out.dedup.records)
            if (r.is_real) out.real_count++;
    }
    return out;
}

}  // namespace

SolveOutcome solve_osculants(const SparseHypersurface& target, const Multidegree& d,
                             const TrackerConfig& cfg) {
    StartSet ss = build_start_set(d);
    const uint64_t expected = count_primitive(d).to_u64();

    SolveOutcome out;
    constexpr int kMaxAttempts = 3;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        TrackerConfig acfg = cfg;
        if (attempt > 0) {
            acfg.gamma_seed = cfg.gamma_seed + 0x9e3779b9ULL * static_cast<uint64_t>(attempt);
            acfg.max_step = std::max(cfg.min_step, cfg.max_step / (1 << attempt));
            acfg.initial_step = std::min(acfg.initial_step, acfg.max_step);
        }
        out = run_pipeline_once(target, ss, d, acfg);
        out.retries = attempt;
        bool clean = out.failed_paths == 0 && out.degenerate_normalizations == 0 &&
                     out.dedup.collision_groups.empty() &&
                     out.dedup.records.size() == expected;
        if (clean) break;
    }
    return out;
}

ExperimentResult run_experiment(const Multidegree& d, int trials, uint64_t seed,
                                const TrackerConfig& cfg, int threads) {
    if (trials < 1) throw std::invalid_argument("trial count must be >= 1");
    ExperimentResult result;
    result.trials.assign(static_cast<size_t>(trials), TrialRecord{});

    const int parity = count_primitive(d).is_even() ? 0 : 1;
    const int expected_paths = static_cast<int>(count_primitive(d).to_u64());

    auto run_trial = [&](int t) {
        TrialRecord& rec = result.trials[static_cast<size_t>(t)];
        // Per-trial seed from a dedicated stream so trials are independent of
        // scheduling and of each other.
        SplitMix64 derive(seed);
        derive.state += static_cast<uint64_t>(t) * 0x9e3779b97f4a7c15ULL;
        rec.trial_seed = derive.next();
        SparseHypersurface target = random_real_target(d, rec.trial_seed);
        SolveOutcome out = solve_osculants(target, d, cfg);
        if (out.failed_paths > 0 || out.degenerate_normalizations > 0 ||
            static_cast<int>(out.dedup.records.size()) != expected_paths) {
            rec.failed = true;
            return;
        }
        rec.real_count = out.real_count;
        rec.parity_ok = (out.real_count % 2 == parity);
    };

    threads = std::max(1, std::min(threads, trials));
    if (threads == 1) {
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) run_trial(t);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<int> counts;
    for (const TrialRecord& rec : result.trials) {
        if (rec.failed) {
            result.failed_trials++;
            continue;
        }
        counts.push_back(rec.real_count);
    }
    result.tally = tally_experiment(counts, d);
    return result;
}

}  // namespace osculant
