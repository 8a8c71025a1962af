#include "osculant/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace osculant {

using nlohmann::json;

SparseHypersurface hypersurface_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("curve JSON requires fields \"n\" and \"terms\"");
    int n = j.at("n").get<int>();
    std::vector<HypersurfaceTerm> terms;
    for (const auto& jt : j.at("terms")) {
        HypersurfaceTerm t;
        t.exp = jt.at("exp").get<std::vector<int>>();
        t.c = Complex(jt.value("re", 0.0), jt.value("im", 0.0));
        terms.push_back(std::move(t));
    }
    return SparseHypersurface(n, std::move(terms));
}

SparseHypersurface load_hypersurface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return hypersurface_from_json(ss.str());
}

std::string hypersurface_to_json(const SparseHypersurface& f) {
    json terms = json::array();
    for (const auto& t : f.terms())
        terms.push_back({{"exp", t.exp}, {"re", t.c.real()}, {"im", t.c.imag()}});
    return json{{"n", f.dimension()}, {"terms", terms}}.dump(2);
}

static json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

static json tracker_json(const TrackerConfig& cfg) {
    return json{{"initial_step", cfg.initial_step},
                {"min_step", cfg.min_step},
                {"max_step", cfg.max_step},
                {"newton_tol", cfg.newton_tol},
                {"max_newton_iters", cfg.max_newton_iters},
                {"max_steps", cfg.max_steps},
                {"gamma_seed", cfg.gamma_seed},
                {"endpoint_refine_iters", cfg.endpoint_refine_iters}};
}

RunManifest RunManifest::make(const Multidegree& d, const std::string& target_source,
                              const TrackerConfig& cfg) {
    auto now = std::chrono::system_clock::now();
    auto t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return RunManifest{d, target_source, cfg, gamma_from_seed(cfg.gamma_seed), buf};
}

static json manifest_json(const RunManifest& m) {
    return json{{"tool", kToolName},
                {"version", kToolVersion},
                {"degree", m.d.parts()},
                {"target", m.target_source},
                {"tracker", tracker_json(m.tracker)},
                {"gamma", complex_pair(m.gamma)},
                {"timestamp", m.timestamp}};
}

static json alpha_json(const AlphaPoint& p) {
    json rows = json::array();
    for (const auto& row : p.alpha) {
        json r = json::array();
        for (const Complex& a : row) r.push_back(complex_pair(a));
        rows.push_back(r);
    }
    return rows;
}

std::string start_set_to_json(const StartSet& ss) {
    json points = json::array();
    for (const auto& [nk, p] : ss.points)
        points.push_back({{"necklace", nk.str()}, {"alpha", alpha_json(p)}});
    return json{{"degree", ss.d.parts()}, {"points", points}}.dump(2);
}

std::string solve_outcome_to_json(const SolveOutcome& out, const RunManifest& manifest) {
    json paths = json::array();
    for (const PathResult& pr : out.paths) {
        json jp{{"status", to_string(pr.status)},
                {"steps", pr.steps_taken},
                {"final_residual", pr.final_residual},
                {"alpha", alpha_json(pr.endpoint)}};
        if (pr.source) jp["necklace"] = pr.source->str();
        paths.push_back(std::move(jp));
    }
    json oscs = json::array();
    for (const OsculantRecord& r : out.dedup.records) {
        json coeffs = json::array();
        for (const auto& row : r.form.a) {
            json jr = json::array();
            for (const Complex& v : row) jr.push_back(complex_pair(v));
            coeffs.push_back(jr);
        }
        oscs.push_back({{"necklace", r.source.str()},
                        {"coefficients", coeffs},
                        {"is_real", r.is_real},
                        {"residual", r.residual}});
    }
    json collisions = json::array();
    for (const auto& g : out.dedup.collision_groups) collisions.push_back(g);
    return json{{"manifest", manifest_json(manifest)},
                {"paths", paths},
                {"osculants", oscs},
                {"collisions", collisions},
                {"summary",
                 {{"paths", out.paths.size()},
                  {"failed_paths", out.failed_paths},
                  {"degenerate_normalizations", out.degenerate_normalizations},
                  {"osculants", out.dedup.records.size()},
                  {"real", out.real_count},
                  {"retries", out.retries},
                  {"gamma_seed_used", out.config_used.gamma_seed}}}}
        .dump(2);
}

std::string experiment_to_csv(const ExperimentResult& res) {
    std::ostringstream os;
    os << "row,count,anomalies\n";
    long long total = 0;
    for (const auto& [row, cnt] : res.tally.rows) {
        os << row << "," << cnt << ",0\n";
        total += cnt;
    }
    os << "total," << total << "," << res.tally.anomalous_counts.size() << "\n";
    return os.str();
}

std::string experiment_to_json(const ExperimentResult& res, const RunManifest& manifest) {
    json rows = json::object();
    for (const auto& [row, cnt] : res.tally.rows) rows[std::to_string(row)] = cnt;
    json per_trial = json::array();
    for (const TrialRecord& t : res.trials)
        per_trial.push_back({{"seed", t.trial_seed},
                             {"real", t.real_count},
                             {"failed", t.failed},
                             {"parity_ok", t.parity_ok}});
    return json{{"manifest", manifest_json(manifest)},
                {"rows", rows},
                {"anomalous_counts", res.tally.anomalous_counts},
                {"failed_trials", res.failed_trials},
                {"trials", per_trial}}
        .dump(2);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

}  // namespace osculant
