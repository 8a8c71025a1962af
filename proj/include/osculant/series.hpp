#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

namespace osculant {

using Complex = std::complex<double>;

/// Power series truncated at t^order: c[k] is the coefficient of t^k.
/// Operations on operands of unequal order truncate to the smaller order.
/// Scalar is complex<double> for values, Dual for forward-mode derivatives.
template <class Scalar>
struct SeriesT {
    std::vector<Scalar> c;

    SeriesT() = default;
    explicit SeriesT(int order) : c(static_cast<size_t>(order), Scalar(0.0)) {
        if (order < 1) throw std::invalid_argument("series order must be >= 1");
    }

    static SeriesT constant(const Scalar& v, int order) {
        SeriesT s(order);
        s.c[0] = v;
        return s;
    }

    int order() const { return static_cast<int>(c.size()); }

    Scalar coeff(int k) const {
        return (k >= 0 && k < order()) ? c[static_cast<size_t>(k)] : Scalar(0.0);
    }
};

template <class Scalar>
SeriesT<Scalar> series_add(const SeriesT<Scalar>& a, const SeriesT<Scalar>& b) {
    SeriesT<Scalar> r(std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k)
        r.c[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k)] + b.c[static_cast<size_t>(k)];
    return r;
}

template <class Scalar>
SeriesT<Scalar> series_sub(const SeriesT<Scalar>& a, const SeriesT<Scalar>& b) {
    SeriesT<Scalar> r(std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k)
        r.c[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k)] - b.c[static_cast<size_t>(k)];
    return r;
}

/// Cauchy product truncated at the smaller operand order.
template <class Scalar>
SeriesT<Scalar> series_mul(const SeriesT<Scalar>& a, const SeriesT<Scalar>& b) {
    SeriesT<Scalar> r(std::min(a.order(), b.order()));
    const int m = r.order();
    for (int i = 0; i < m && i < a.order(); ++i) {
        const Scalar& ai = a.c[static_cast<size_t>(i)];
        for (int j = 0; j + i < m && j < b.order(); ++j)
            r.c[static_cast<size_t>(i + j)] += ai * b.c[static_cast<size_t>(j)];
    }
    return r;
}

template <class Scalar>
SeriesT<Scalar> series_scale(const SeriesT<Scalar>& a, const Scalar& s) {
    SeriesT<Scalar> r = a;
    for (auto& v : r.c) v = v * s;
    return r;
}

/// a^e mod t^order by repeated squaring; e = 0 gives the constant series 1.
template <class Scalar>
SeriesT<Scalar> series_pow(const SeriesT<Scalar>& a, unsigned e) {
    SeriesT<Scalar> r = SeriesT<Scalar>::constant(Scalar(1.0), a.order());
    SeriesT<Scalar> base = a;
    while (e > 0) {
        if (e & 1u) r = series_mul(r, base);
        base = series_mul(base, base);
        e >>= 1u;
    }
    return r;
}

using TruncatedSeries = SeriesT<Complex>;

}  // namespace osculant
