#pragma once

#include <complex>

namespace osculant {

/// Forward-mode dual number over complex<double>: value plus the derivative
/// with respect to one chosen variable. Lifting a constant zeroes the
/// derivative part, so the same templated series code computes exact
/// directional derivatives.
struct Dual {
    std::complex<double> v{0.0, 0.0};
    std::complex<double> d{0.0, 0.0};

    Dual() = default;
    Dual(double value) : v(value) {}
    Dual(const std::complex<double>& value) : v(value) {}
    Dual(const std::complex<double>& value, const std::complex<double>& deriv)
        : v(value), d(deriv) {}

    Dual operator-() const { return Dual(-v, -d); }

    Dual& operator+=(const Dual& o) {
        v += o.v;
        d += o.d;
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        v -= o.v;
        d -= o.d;
        return *this;
    }

    friend Dual operator+(const Dual& a, const Dual& b) { return Dual(a.v + b.v, a.d + b.d); }
    friend Dual operator-(const Dual& a, const Dual& b) { return Dual(a.v - b.v, a.d - b.d); }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return Dual(a.v * b.v, a.v * b.d + a.d * b.v);
    }
    friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

}  // namespace osculant
