#pragma once

#include <string>
#include <vector>

#include "osculant/series.hpp"

namespace osculant {

struct HypersurfaceTerm {
    std::vector<int> exp;  // exponent vector I, length n, entries >= 0
    Complex c;

    int total_degree() const {
        int t = 0;
        for (int e : exp) t += e;
        return t;
    }
};

/// Sparse polynomial f = sum_I c_I x^I with no constant term (the
/// hypersurface passes through the origin). Terms are kept sorted by
/// lexicographic exponent order with zero coefficients dropped, so iteration
/// order is deterministic.
class SparseHypersurface {
public:
    SparseHypersurface(int n, std::vector<HypersurfaceTerm> terms);

    int dimension() const { return n_; }
    const std::vector<HypersurfaceTerm>& terms() const { return terms_; }

    /// Coefficient of x^I (zero if absent).
    Complex coefficient(const std::vector<int>& exp) const;

    bool operator==(const SparseHypersurface& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

private:
    int n_;
    std::vector<HypersurfaceTerm> terms_;
};

inline bool operator==(const HypersurfaceTerm& a, const HypersurfaceTerm& b) {
    return a.exp == b.exp && a.c == b.c;
}

/// ca * a + cb * b over the union of supports.
SparseHypersurface combine_linear(Complex ca, const SparseHypersurface& a, Complex cb,
                                  const SparseHypersurface& b);

SparseHypersurface scale_hypersurface(const SparseHypersurface& f, Complex s);

/// f(x(t)) mod t^m. Every x_i must vanish at t = 0 and all orders must be
/// equal. Terms with |I| >= m are skipped: each x_i has valuation >= 1, so
/// such monomials only contribute at or above t^m.
template <class Scalar>
SeriesT<Scalar> compose_hypersurface(const SparseHypersurface& f,
                                     const std::vector<SeriesT<Scalar>>& x) {
    if (static_cast<int>(x.size()) != f.dimension())
        throw std::invalid_argument("composition dimension mismatch");
    if (x.empty()) throw std::invalid_argument("composition requires at least one coordinate");
    const int m = x[0].order();
    for (const auto& xi : x) {
        if (xi.order() != m)
            throw std::invalid_argument("composition requires equal series orders");
        if (!(xi.c[0] == Scalar(0.0)))
            throw std::invalid_argument("composition requires x(0) = 0");
    }

    // Memoized powers of each coordinate, grown on demand.
    std::vector<std::vector<SeriesT<Scalar>>> pw(x.size());
    auto power = [&](size_t i, int e) -> const SeriesT<Scalar>& {
        auto& pi = pw[i];
        if (pi.empty()) pi.push_back(SeriesT<Scalar>::constant(Scalar(1.0), m));
        while (static_cast<int>(pi.size()) <= e) pi.push_back(series_mul(pi.back(), x[i]));
        return pi[static_cast<size_t>(e)];
    };

    SeriesT<Scalar> acc(m);
    for (const auto& term : f.terms()) {
        if (term.total_degree() >= m) continue;
        SeriesT<Scalar> prod = SeriesT<Scalar>::constant(Scalar(term.c), m);
        for (size_t i = 0; i < x.size(); ++i)
            if (term.exp[i] > 0) prod = series_mul(prod, power(i, term.exp[i]));
        acc = series_add(acc, prod);
    }
    return acc;
}

}  // namespace osculant
