#include "osculant/system.hpp"

#include <algorithm>
#include <cmath>

namespace osculant {

AlphaPoint::AlphaPoint(Multidegree deg, std::vector<std::vector<Complex>> a)
    : d(std::move(deg)), alpha(std::move(a)) {
    if (static_cast<int>(alpha.size()) != d.size())
        throw std::invalid_argument("alpha shape does not match multidegree");
    for (int i = 0; i < d.size(); ++i)
        if (static_cast<int>(alpha[static_cast<size_t>(i)].size()) != d[i])
            throw std::invalid_argument("alpha shape does not match multidegree");
}

std::vector<Complex> AlphaPoint::flatten() const {
    std::vector<Complex> flat;
    flat.reserve(static_cast<size_t>(d.total()));
    for (const auto& row : alpha) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

AlphaPoint AlphaPoint::unflatten(const Multidegree& d, const std::vector<Complex>& flat) {
    if (static_cast<int>(flat.size()) != d.total())
        throw std::invalid_argument("flat alpha length does not match multidegree");
    std::vector<std::vector<Complex>> rows;
    rows.reserve(static_cast<size_t>(d.size()));
    size_t at = 0;
    for (int i = 0; i < d.size(); ++i) {
        rows.emplace_back(flat.begin() + static_cast<long>(at),
                          flat.begin() + static_cast<long>(at + static_cast<size_t>(d[i])));
        at += static_cast<size_t>(d[i]);
    }
    return AlphaPoint(d, std::move(rows));
}

Complex AlphaPoint::alpha_product() const {
    Complex p(1.0);
    for (const auto& row : alpha)
        for (const Complex& a : row) p *= a;
    return p;
}

double AlphaPoint::max_abs() const {
    double m = 0.0;
    for (const auto& row : alpha)
        for (const Complex& a : row) m = std::max(m, std::abs(a));
    return m;
}

double Residual::max_norm() const {
    double m = std::abs(norm_defect);
    for (const Complex& v : h) m = std::max(m, std::abs(v));
    return m;
}

std::vector<Complex> Residual::full() const {
    std::vector<Complex> r = h;
    r.push_back(norm_defect);
    return r;
}

SparseHypersurface tilde_hypersurface(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n > 30) throw std::invalid_argument("start hypersurface limited to 30 variables");
    std::vector<HypersurfaceTerm> terms;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> exp(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) exp[static_cast<size_t>(i)] = 1;
        terms.push_back({std::move(exp), Complex(1.0)});
    }
    return SparseHypersurface(n, std::move(terms));
}

std::vector<TruncatedSeries> expand_parametrization(const AlphaPoint& p, int m) {
    return expand_parametrization_generic<Complex>(p.alpha, m);
}

Residual evaluate(const SparseHypersurface& f, const AlphaPoint& p) {
    if (f.dimension() != p.d.size())
        throw std::invalid_argument("hypersurface dimension does not match multidegree");
    const int m = p.d.total();
    Residual r;
    if (m > 1) {
        auto x = expand_parametrization(p, m);
        auto composed = compose_hypersurface(f, x);
        r.h.assign(composed.c.begin() + 1, composed.c.end());
    }
    r.norm_defect = p.alpha_product() - Complex(1.0);
    return r;
}

ComplexMatrix jacobian(const SparseHypersurface& f, const AlphaPoint& p) {
    if (f.dimension() != p.d.size())
        throw std::invalid_argument("hypersurface dimension does not match multidegree");
    const int m = p.d.total();
    ComplexMatrix jac(m, m);

    // One forward-mode pass per unknown: seed the derivative of that alpha.
    int col = 0;
    for (size_t i = 0; i < p.alpha.size(); ++i) {
        for (size_t j = 0; j < p.alpha[i].size(); ++j) {
            std::vector<std::vector<Dual>> da(p.alpha.size());
            for (size_t ii = 0; ii < p.alpha.size(); ++ii) {
                da[ii].reserve(p.alpha[ii].size());
                for (size_t jj = 0; jj < p.alpha[ii].size(); ++jj)
                    da[ii].emplace_back(p.alpha[ii][jj],
                                        (ii == i && jj == j) ? Complex(1.0) : Complex(0.0));
            }
            if (m > 1) {
                auto x = expand_parametrization_generic<Dual>(da, m);
                auto composed = compose_hypersurface(f, x);
                for (int k = 1; k < m; ++k) jac.at(k - 1, col) = composed.c[static_cast<size_t>(k)].d;
            }
            Dual prod(Complex(1.0));
            for (const auto& row : da)
                for (const Dual& a : row) prod = prod * a;
            jac.at(m - 1, col) = prod.d;
            ++col;
        }
    }
    return jac;
}

HomotopyProblem::HomotopyProblem(SparseHypersurface target_, SparseHypersurface start_,
                                 Complex gamma_, Multidegree d_)
    : target(std::move(target_)), start(std::move(start_)), gamma(gamma_), d(std::move(d_)) {
    if (target.dimension() != start.dimension())
        throw std::invalid_argument("start and target hypersurfaces must share dimension");
    if (target.dimension() != d.size())
        throw std::invalid_argument("hypersurface dimension does not match multidegree");
    if (gamma == Complex(0.0)) throw std::invalid_argument("gamma must be nonzero");
}

SparseHypersurface homotopy_coeffs(const HomotopyProblem& hp, double s) {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("homotopy parameter must be in [0,1]");
    if (s == 1.0) return hp.target;
    return combine_linear(Complex(1.0 - s) * hp.gamma, hp.start, Complex(s), hp.target);
}

}  // namespace osculant
