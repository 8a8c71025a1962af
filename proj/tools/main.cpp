// osculant: enumerate primitive fixed-content necklaces, build the start
// system they index, and continue its solutions to the osculants of a target
// hypersurface through the origin.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "osculant/counting.hpp"
#include "osculant/experiment.hpp"
#include "osculant/io.hpp"

using namespace osculant;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

Multidegree parse_degree(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--degree", "expected comma-separated positive integers");
        }
    }
    if (parts.empty())
        throw CLI::ValidationError("--degree", "expected comma-separated positive integers");
    return Multidegree(parts);
}

struct SolveOptions {
    std::string degree;
    std::string curve_file;
    bool random = false;
    uint64_t seed = 1;
    uint64_t gamma_seed = 1;
    double tol = 1e-10;
    std::string out;
    bool json = false;
};

TrackerConfig tracker_config(const SolveOptions& opt) {
    TrackerConfig cfg;
    cfg.gamma_seed = opt.gamma_seed;
    cfg.newton_tol = opt.tol;
    cfg.validate();
    return cfg;
}

int cmd_count(const std::vector<int>& parts, bool json) {
    Multidegree d(parts);
    Count prim = count_primitive(d);
    Count all = count_all(d);

    // identity check: multinomial = sum over k | gcd(d) of (|d|/k) * primitive(d/k)
    Count rhs(0);
    int g = d.gcd();
    for (int k = 1; k <= g; ++k)
        if (g % k == 0)
            rhs += Count(static_cast<uint64_t>(d.total() / k)) * count_primitive(d.divided_by(k));
    bool identity_ok = (rhs == multinomial(d));

    if (json) {
        std::printf("{\"degree\": \"%s\", \"primitive\": \"%s\", \"total\": \"%s\", "
                    "\"identity_ok\": %s}\n",
                    d.str().c_str(), prim.str().c_str(), all.str().c_str(),
                    identity_ok ? "true" : "false");
    } else {
        std::printf("primitive: %s, total: %s\n", prim.str().c_str(), all.str().c_str());
        std::printf("recursion identity: %s\n", identity_ok ? "ok" : "FAILED");
    }
    return identity_ok ? kExitOk : kExitNumerical;
}

int cmd_necklaces(const std::string& degree, bool primitive_only, bool json) {
    Multidegree d = parse_degree(degree);
    auto necklaces = enumerate_necklaces(d, primitive_only);
    if (json) {
        std::string sep;
        std::printf("[");
        for (const auto& nk : necklaces) {
            auto fc = fold_class(nk);
            std::printf("%s{\"word\": \"%s\", \"fold\": %d}", sep.c_str(), nk.str().c_str(),
                        fc.k);
            sep = ", ";
        }
        std::printf("]\n");
    } else {
        for (const auto& nk : necklaces) {
            auto fc = fold_class(nk);
            if (fc.k == 1)
                std::printf("%s\n", nk.str().c_str());
            else
                std::printf("%s  (%d-fold)\n", nk.str().c_str(), fc.k);
        }
        std::printf("%zu necklaces\n", necklaces.size());
    }
    return kExitOk;
}

int cmd_verify_start(const std::string& degree, const std::string& out) {
    Multidegree d = parse_degree(degree);
    const SparseHypersurface tilde = tilde_hypersurface(d.size());
    auto necklaces = enumerate_necklaces(d, /*primitive_only=*/true);
    size_t ok = 0;
    StartSet ss{d, {}};
    for (const auto& nk : necklaces) {
        AlphaPoint p = start_point(nk);
        double res = evaluate(tilde, p).max_norm();
        if (res <= 1e-12) {
            ++ok;
        } else {
            std::fprintf(stderr, "residual %.3e exceeds 1e-12 for necklace %s\n", res,
                         nk.str().c_str());
        }
        ss.points.emplace_back(nk, std::move(p));
    }
    std::printf("%zu/%zu start points verified\n", ok, necklaces.size());
    if (!out.empty()) write_file(out, start_set_to_json(ss));
    return ok == necklaces.size() ? kExitOk : kExitNumerical;
}

int cmd_solve(const SolveOptions& opt) {
    Multidegree d = parse_degree(opt.degree);
    TrackerConfig cfg = tracker_config(opt);

    SparseHypersurface target = [&] {
        if (!opt.curve_file.empty()) return load_hypersurface(opt.curve_file);
        if (opt.random) return random_real_target(d, opt.seed);
        throw CLI::ValidationError("solve", "provide --curve FILE or --random");
    }();
    if (target.dimension() != d.size())
        throw CLI::ValidationError("solve", "curve dimension does not match --degree length");

    SolveOutcome outcome = solve_osculants(target, d, cfg);
    RunManifest manifest = RunManifest::make(
        d, opt.curve_file.empty() ? "random:" + std::to_string(opt.seed) : "file:" + opt.curve_file,
        cfg);

    std::string doc = solve_outcome_to_json(outcome, manifest);
    if (!opt.out.empty()) write_file(opt.out, doc);
    if (opt.json) std::printf("%s\n", doc.c_str());

    std::printf("%zu osculants, %d real\n", outcome.dedup.records.size(), outcome.real_count);
    for (const PathResult& pr : outcome.paths)
        if (pr.status != PathStatus::converged)
            std::fprintf(stderr, "path from %s: %s\n",
                         pr.source ? pr.source->str().c_str() : "?",
                         to_string(pr.status).c_str());
    if (!outcome.dedup.collision_groups.empty())
        std::fprintf(stderr,
                     "warning: %zu endpoint collision group(s); target may be non-generic\n",
                     outcome.dedup.collision_groups.size());

    return (outcome.failed_paths == 0 && outcome.degenerate_normalizations == 0) ? kExitOk
                                                                                 : kExitNumerical;
}

int cmd_experiment(const SolveOptions& opt, int trials, int threads) {
    Multidegree d = parse_degree(opt.degree);
    TrackerConfig cfg = tracker_config(opt);
    ExperimentResult res = run_experiment(d, trials, opt.seed, cfg, threads);
    RunManifest manifest = RunManifest::make(d, "random:" + std::to_string(opt.seed), cfg);

    std::string csv = experiment_to_csv(res);
    if (!opt.out.empty())
        write_file(opt.out, csv);
    else
        std::printf("%s", csv.c_str());
    if (opt.json) std::printf("%s\n", experiment_to_json(res, manifest).c_str());

    long long parity_anomalies = static_cast<long long>(res.tally.anomalous_counts.size());
    std::fprintf(stderr, "%d trials: %lld failed, %lld parity anomalies\n", trials,
                 res.failed_trials, parity_anomalies);
    return (res.failed_trials == 0 && parity_anomalies == 0) ? kExitOk : kExitNumerical;
}

int cmd_plot_data(const std::string& solution_file, const std::string& range, int samples,
                  const std::string& out) {
    if (samples < 2) throw CLI::ValidationError("--samples", "need at least 2 samples");
    std::ifstream in(solution_file);
    if (!in) throw std::runtime_error("cannot open solution file: " + solution_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(ss.str());

    double lo = 0.0, hi = 1.0;
    if (!range.empty()) {
        auto colon = range.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected LO:HI");
        lo = std::stod(range.substr(0, colon));
        hi = std::stod(range.substr(colon + 1));
    }

    std::vector<CoefficientForm> forms;
    for (const auto& osc : j.at("osculants")) {
        if (!osc.at("is_real").get<bool>()) continue;
        std::vector<std::vector<Complex>> rows;
        std::vector<int> parts;
        for (const auto& jrow : osc.at("coefficients")) {
            std::vector<Complex> row;
            for (const auto& pair : jrow)
                row.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
            parts.push_back(static_cast<int>(row.size()));
            rows.push_back(std::move(row));
        }
        forms.emplace_back(Multidegree(parts), std::move(rows), true);
    }

    std::ostringstream csv;
    csv << "osculant,t";
    size_t ncoords = forms.empty() ? 0 : forms.front().a.size();
    for (size_t c = 1; c <= ncoords; ++c) csv << ",x" << c;
    csv << "\n";
    for (size_t idx = 0; idx < forms.size(); ++idx) {
        auto pts = sample_curve(forms[idx], lo, hi, samples);
        for (int k = 0; k < samples; ++k) {
            double t = lo + (hi - lo) * static_cast<double>(k) / (samples - 1);
            csv << idx << "," << t;
            for (const Complex& v : pts[static_cast<size_t>(k)]) csv << "," << v.real();
            csv << "\n";
        }
    }
    if (!out.empty())
        write_file(out, csv.str());
    else
        std::printf("%s", csv.str().c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"necklace-indexed osculants of hypersurfaces through the origin"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    bool json = false;
    app.add_flag("--json", json, "emit JSON to stdout");

    auto* count = app.add_subcommand("count", "primitive and total necklace counts");
    std::vector<int> count_degree;
    count->add_option("degree", count_degree, "multidegree entries")->required()->expected(-1);

    auto* necklaces = app.add_subcommand("necklaces", "list necklaces of a multidegree");
    std::string nk_degree;
    bool nk_primitive = false;
    necklaces->add_option("--degree", nk_degree, "comma-separated multidegree")->required();
    necklaces->add_flag("--primitive", nk_primitive, "primitive necklaces only");

    auto* verify = app.add_subcommand("verify-start", "check the start system solutions");
    std::string vs_degree, vs_out;
    verify->add_option("--degree", vs_degree)->required();
    verify->add_option("--out", vs_out, "write the start set as JSON");

    SolveOptions sopt;
    auto* solve = app.add_subcommand("solve", "compute all osculants of a target curve");
    solve->add_option("--degree", sopt.degree)->required();
    solve->add_option("--curve", sopt.curve_file, "target curve JSON file");
    solve->add_flag("--random", sopt.random, "use a random real target");
    solve->add_option("--seed", sopt.seed, "random target seed");
    solve->add_option("--gamma-seed", sopt.gamma_seed, "homotopy gamma seed");
    solve->add_option("--tol", sopt.tol, "Newton tolerance");
    solve->add_option("--out", sopt.out, "write results JSON to a file");

    SolveOptions eopt;
    int trials = 100;
    int threads = 1;
    auto* experiment = app.add_subcommand("experiment", "tally real counts over random targets");
    experiment->add_option("--degree", eopt.degree)->required();
    experiment->add_option("--trials", trials, "number of random targets")->required();
    experiment->add_option("--seed", eopt.seed, "experiment seed");
    experiment->add_option("--gamma-seed", eopt.gamma_seed, "homotopy gamma seed");
    experiment->add_option("--tol", eopt.tol, "Newton tolerance");
    experiment->add_option("--out", eopt.out, "write the histogram CSV to a file");
    experiment->add_option("--threads", threads, "worker threads");

    auto* plot = app.add_subcommand("plot-data", "sample real osculants for plotting");
    std::string plot_solution, plot_range, plot_out;
    int plot_samples = 100;
    plot->add_option("--solution", plot_solution, "solve output JSON")->required();
    plot->add_option("--range", plot_range, "t range LO:HI (default 0:1)");
    plot->add_option("--samples", plot_samples, "sample count");
    plot->add_option("--out", plot_out, "output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(count_degree, json);
        if (necklaces->parsed()) return cmd_necklaces(nk_degree, nk_primitive, json);
        if (verify->parsed()) return cmd_verify_start(vs_degree, vs_out);
        if (solve->parsed()) {
            sopt.json = json;
            return cmd_solve(sopt);
        }
        if (experiment->parsed()) {
            eopt.json = json;
            return cmd_experiment(eopt, trials, threads);
        }
        if (plot->parsed()) return cmd_plot_data(plot_solution, plot_range, plot_samples, plot_out);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    }
    return kExitUsage;
}
