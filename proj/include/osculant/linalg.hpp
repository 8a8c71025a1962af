#pragma once

#include <complex>
#include <vector>

namespace osculant {

struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> a;  // row-major

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    std::complex<double>& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const std::complex<double>& at(int r, int c) const {
        return a[static_cast<size_t>(r) * cols + c];
    }
};

/// Dense LU factorization with partial pivoting for small complex systems.
class ComplexLU {
public:
    explicit ComplexLU(ComplexMatrix m);

    bool singular() const { return singular_; }

    /// Ratio max|pivot| / min|pivot|; a cheap conditioning signal.
    double pivot_ratio() const;

    /// Solves A x = b. Must not be called when singular().
    std::vector<std::complex<double>> solve(const std::vector<std::complex<double>>& b) const;

private:
    ComplexMatrix lu_;
    std::vector<int> perm_;
    bool singular_ = false;
};

}  // namespace osculant
