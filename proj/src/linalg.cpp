#include "osculant/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace osculant {

ComplexLU::ComplexLU(ComplexMatrix m) : lu_(std::move(m)) {
    if (lu_.rows != lu_.cols) throw std::invalid_argument("LU requires a square matrix");
    const int n = lu_.rows;
    perm_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm_[static_cast<size_t>(i)] = i;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu_.at(k, k));
        for (int r = k + 1; r < n; ++r) {
            double v = std::abs(lu_.at(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) {
            singular_ = true;
            return;
        }
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(lu_.at(k, c), lu_.at(piv, c));
            std::swap(perm_[static_cast<size_t>(k)], perm_[static_cast<size_t>(piv)]);
        }
        const std::complex<double> d = lu_.at(k, k);
        for (int r = k + 1; r < n; ++r) {
            std::complex<double> f = lu_.at(r, k) / d;
            lu_.at(r, k) = f;
            for (int c = k + 1; c < n; ++c) lu_.at(r, c) -= f * lu_.at(k, c);
        }
    }
}

double ComplexLU::pivot_ratio() const {
    if (singular_) return std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int k = 0; k < lu_.rows; ++k) {
        double v = std::abs(lu_.at(k, k));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi / lo;
}

std::vector<std::complex<double>> ComplexLU::solve(
    const std::vector<std::complex<double>>& b) const {
    if (singular_) throw std::runtime_error("LU solve on a singular matrix");
    const int n = lu_.rows;
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("LU solve size mismatch");
    std::vector<std::complex<double>> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = b[static_cast<size_t>(perm_[static_cast<size_t>(i)])];
    // forward substitution (unit lower triangle)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[static_cast<size_t>(i)] -= lu_.at(i, j) * x[static_cast<size_t>(j)];
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[static_cast<size_t>(i)] -= lu_.at(i, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] /= lu_.at(i, i);
    }
    return x;
}

}  // namespace osculant
