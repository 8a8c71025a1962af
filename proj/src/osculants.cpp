#include "osculant/osculants.hpp"

#include <algorithm>
#include <cmath>

#include "osculant/counting.hpp"

namespace osculant {

CoefficientForm::CoefficientForm(Multidegree deg, std::vector<std::vector<Complex>> coeffs,
                                 bool norm)
    : d(std::move(deg)), a(std::move(coeffs)), normalized(norm) {
    if (static_cast<int>(a.size()) != d.size())
        throw std::invalid_argument("coefficient shape does not match multidegree");
    for (int i = 0; i < d.size(); ++i)
        if (static_cast<int>(a[static_cast<size_t>(i)].size()) != d[i])
            throw std::invalid_argument("coefficient shape does not match multidegree");
}

std::vector<Complex> CoefficientForm::flatten() const {
    std::vector<Complex> flat;
    flat.reserve(static_cast<size_t>(d.total()));
    for (const auto& row : a) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

std::vector<TruncatedSeries> CoefficientForm::to_series(int m) const {
    std::vector<TruncatedSeries> x;
    x.reserve(a.size());
    for (const auto& row : a) {
        TruncatedSeries xi(m);
        for (size_t j = 0; j < row.size(); ++j)
            if (static_cast<int>(j) + 1 < m) xi.c[j + 1] = row[j];
        x.push_back(std::move(xi));
    }
    return x;
}

// Full expansion of x_i(t) = prod_j (alpha t + 1) - 1: a[i][j-1] is the
// elementary symmetric polynomial e_j of the alpha row.
static std::vector<std::vector<Complex>> expand_full(const AlphaPoint& p) {
    std::vector<std::vector<Complex>> a;
    a.reserve(p.alpha.size());
    for (const auto& row : p.alpha) {
        std::vector<Complex> e(row.size() + 1, Complex(0.0));
        e[0] = Complex(1.0);
        for (const Complex& r : row)
            for (size_t j = e.size() - 1; j >= 1; --j) e[j] += r * e[j - 1];
        a.emplace_back(e.begin() + 1, e.end());
    }
    return a;
}

CoefficientForm to_coefficient_form(const AlphaPoint& p) {
    auto a = expand_full(p);
    const Complex a11 = a[0][0];
    if (std::abs(a11) <= 1e-8)
        throw DegenerateNormalization(CoefficientForm(p.d, std::move(a), false));
    // Reparametrize t -> t / a11: a_{i,j} -> a_{i,j} / a11^j.
    for (auto& row : a) {
        Complex pw(1.0);
        for (auto& v : row) {
            pw *= a11;
            v /= pw;
        }
    }
    a[0][0] = Complex(1.0);  // exact by construction
    return CoefficientForm(p.d, std::move(a), true);
}

bool is_real_osculant(const CoefficientForm& cf, double tol) {
    if (!cf.normalized)
        throw std::invalid_argument("reality test requires a normalized coefficient form");
    // Relative above unit scale: normalized coefficients can reach 1e10 when
    // a_{1,1} is small, and endpoint noise scales with the coefficient.
    for (const auto& row : cf.a)
        for (const Complex& v : row)
            if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v))) return false;
    return true;
}

// Entrywise closeness at tolerance relative to the entry scale (absolute
// below unit scale).
static bool close_entrywise(const std::vector<Complex>& a, const std::vector<Complex>& b,
                            double tol) {
    for (size_t i = 0; i < a.size(); ++i) {
        double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
        if (std::abs(a[i] - b[i]) > tol * scale) return false;
    }
    return true;
}

DedupeResult dedupe(const std::vector<OsculantRecord>& records, double tol) {
    for (const auto& r : records) {
        if (!r.form.normalized)
            throw std::invalid_argument("dedupe requires normalized records");
        if (r.form.d != records.front().form.d)
            throw std::invalid_argument("dedupe requires records of one multidegree");
    }
    DedupeResult out;
    std::vector<std::vector<Complex>> reps;
    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < records.size(); ++i) {
        std::vector<Complex> flat = records[i].form.flatten();
        bool placed = false;
        for (size_t g = 0; g < reps.size(); ++g) {
            if (close_entrywise(flat, reps[g], tol)) {
                groups[g].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            reps.push_back(std::move(flat));
            groups.push_back({i});
        }
    }
    for (const auto& g : groups) {
        out.records.push_back(records[g.front()]);
        if (g.size() > 1) out.collision_groups.push_back(g);
    }
    return out;
}

PairingReport conjugation_pairing(const std::vector<OsculantRecord>& records, double tol) {
    PairingReport rep;
    std::vector<bool> paired(records.size(), false);
    for (size_t i = 0; i < records.size(); ++i) {
        if (records[i].is_real) {
            rep.real_count++;
            paired[i] = true;
        }
    }
    for (size_t i = 0; i < records.size(); ++i) {
        if (paired[i]) continue;
        std::vector<Complex> conj_i = records[i].form.flatten();
        for (auto& v : conj_i) v = std::conj(v);
        for (size_t j = i + 1; j < records.size(); ++j) {
            if (paired[j] || records[j].is_real) continue;
            if (close_entrywise(conj_i, records[j].form.flatten(), tol)) {
                rep.pairs.emplace_back(i, j);
                paired[i] = paired[j] = true;
                break;
            }
        }
        if (!paired[i]) rep.anomalies.push_back(i);
    }
    return rep;
}

ExperimentTally tally_experiment(const std::vector<int>& real_counts, const Multidegree& d) {
    const int parity = count_primitive(d).is_even() ? 0 : 1;
    ExperimentTally t;
    for (int c : real_counts) {
        if (c < 0 || c % 2 != parity) {
            t.anomalous_counts.push_back(c);
            continue;
        }
        t.rows[(c - parity) / 2]++;
    }
    return t;
}

std::vector<std::vector<Complex>> sample_curve(const CoefficientForm& cf, double t_lo,
                                               double t_hi, int count) {
    if (count < 2) throw std::invalid_argument("sample count must be >= 2");
    std::vector<std::vector<Complex>> pts;
    pts.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        double t = t_lo + (t_hi - t_lo) * static_cast<double>(k) / (count - 1);
        std::vector<Complex> pt;
        pt.reserve(cf.a.size());
        for (const auto& row : cf.a) {
            Complex v(0.0);
            for (size_t j = row.size(); j-- > 0;) v = (v + row[j]) * t;
            pt.push_back(v);
        }
        pts.push_back(std::move(pt));
    }
    return pts;
}

}  // namespace osculant
