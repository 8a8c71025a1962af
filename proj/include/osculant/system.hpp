#pragma once

#include <vector>

#include "osculant/dual.hpp"
#include "osculant/hypersurface.hpp"
#include "osculant/linalg.hpp"
#include "osculant/multidegree.hpp"
#include "osculant/series.hpp"

namespace osculant {

/// A parametrization in root coordinates: x_i(t) = prod_j (alpha[i][j] t + 1) - 1.
/// Points produced by the start builder or the tracker additionally satisfy
/// the chart normalization prod alpha = 1 up to solver tolerance.
struct AlphaPoint {
    Multidegree d;
    std::vector<std::vector<Complex>> alpha;  // alpha[i] has d[i] entries

    AlphaPoint(Multidegree deg, std::vector<std::vector<Complex>> a);

    int unknowns() const { return d.total(); }

    std::vector<Complex> flatten() const;
    static AlphaPoint unflatten(const Multidegree& d, const std::vector<Complex>& flat);

    Complex alpha_product() const;

    /// Max coordinate modulus; the tracker's divergence guard.
    double max_abs() const;
};

/// Residual of the square osculation system at a point: the h_k of the
/// composed series followed by the chart normalization defect.
struct Residual {
    std::vector<Complex> h;  // h_1 .. h_{|d|-1}
    Complex norm_defect;     // prod alpha - 1

    double max_norm() const;
    std::vector<Complex> full() const;  // h entries then norm_defect, length |d|
};

/// The start hypersurface prod(x_i + 1) - 1 expanded: one unit-coefficient
/// term per nonzero subset of the variables.
SparseHypersurface tilde_hypersurface(int n);

template <class Scalar>
std::vector<SeriesT<Scalar>> expand_parametrization_generic(
    const std::vector<std::vector<Scalar>>& alpha, int m) {
    if (m < 1) throw std::invalid_argument("series order must be >= 1");
    std::vector<SeriesT<Scalar>> x;
    x.reserve(alpha.size());
    for (const auto& row : alpha) {
        SeriesT<Scalar> xi = SeriesT<Scalar>::constant(Scalar(1.0), m);
        SeriesT<Scalar> lin(m);
        for (const Scalar& a : row) {
            lin.c[0] = Scalar(1.0);
            if (m > 1) lin.c[1] = a;
            xi = series_mul(xi, lin);
        }
        xi.c[0] = Scalar(0.0);  // constant term is exactly 1; drop it
        x.push_back(std::move(xi));
    }
    return x;
}

/// The coordinate series x_i(t) mod t^m; each has zero constant term and
/// t-coefficient sum_j alpha[i][j].
std::vector<TruncatedSeries> expand_parametrization(const AlphaPoint& p, int m);

/// h_k for k = 1..|d|-1 from f(x(t)) mod t^|d|, plus the normalization defect.
Residual evaluate(const SparseHypersurface& f, const AlphaPoint& p);

/// |d| x |d| Jacobian of the full residual with respect to the flattened
/// alpha (row r < |d|-1 is h_{r+1}, last row the normalization), computed by
/// forward-mode dual numbers through the same composition path as evaluate.
ComplexMatrix jacobian(const SparseHypersurface& f, const AlphaPoint& p);

/// Straight-line parameter homotopy between coefficient points, with the
/// start side twisted by a random unit-modulus gamma that vanishes at s = 1.
struct HomotopyProblem {
    SparseHypersurface target;
    SparseHypersurface start;
    Complex gamma;
    Multidegree d;

    HomotopyProblem(SparseHypersurface target_, SparseHypersurface start_, Complex gamma_,
                    Multidegree d_);
};

/// Coefficient point (1-s) * gamma * start + s * target; s = 1 returns the
/// target bit-identically.
SparseHypersurface homotopy_coeffs(const HomotopyProblem& hp, double s);

}  // namespace osculant
